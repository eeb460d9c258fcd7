#pragma once

#include <vector>

#include "cstar/matrix.hpp"

namespace cstar {

// The word isomorphism M_n(O_n) -> O_n, (a_{i,j}) -> sum s_i a_{i,j} s_j^*.
// The matrix dimension must equal the alphabet size.
CuntzElement eta(const StarMatrix<CuntzElement> &m);

// Level-k variant over the system of length-k word units: the matrix
// dimension must equal n^level. Level 1 is eta.
CuntzElement eta_level(const StarMatrix<CuntzElement> &m, int level);

// Inverse of eta: x -> (s_i^* x s_j)_{i,j}.
StarMatrix<CuntzElement> eta_inv(const CuntzElement &x);

StarMatrix<CuntzElement> eta_inv_level(const CuntzElement &x, int level);

// Corner embedding M_k(e11 A e11) -> r1 A r1 with r1 = e11 + ... + e_kk,
// (a_{i,j}) -> sum e_{i,1} a_{i,j} e_{1,j}. Entries must lie in the corner.
CuntzElement eta1(const StarMatrix<CuntzElement> &m);

// Its inverse on r1 A r1: x -> (e_{1,i} x e_{j,1})_{i,j=1..k}.
StarMatrix<CuntzElement> zeta(const CuntzElement &x, int k);

// The corner isomorphism x -> v^* x v for a co-isometry v (v v^* = 1,
// v^* v a projection). v = s_1^* maps A onto e11 A e11.
CuntzElement corner_iso(const CuntzElement &v, const CuntzElement &x);

// Splits p = v^* v into the orthogonal equivalent pieces v^* e_{i,i} v,
// verifying orthogonality, the projection property, and the sum exactly.
std::vector<CuntzElement> decompose_projection(const CuntzElement &v);

} // namespace cstar
