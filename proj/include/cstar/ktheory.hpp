#pragma once

#include <optional>
#include <vector>

#include "cstar/matrix.hpp"

namespace cstar {

// Level-k matrix picture of a degree-zero element: the entry at (mu, nu) is
// the coefficient of s_mu s_nu^*, rows and columns indexed by length-k words
// in lexicographic order.
struct AFCoreMatrix {
  int n = 2;
  int level = 0;
  StarMatrix<ExactScalar> mat{1, ExactScalar(0)};

  int dim() const { return mat.dim(); }
};

// Requires normalize(x) to contain only degree-zero terms. When `level` is
// given it must be at least the natural level; the element is expanded up.
AFCoreMatrix to_af_core(const CuntzElement &x,
                        std::optional<int> level = std::nullopt);

// Exact rank over Q(i, sqrt2), no pivot tolerance.
int exact_rank(const StarMatrix<ExactScalar> &m);

// Residue class of a projection in the cyclic class group of O_n. The group
// is cyclic of order n-1 with the unit's class mapping to 1 (so every class
// collapses to 0 when n = 2).
struct K0Class {
  int n = 2;
  int residue = 0;

  int modulus() const { return n - 1; }
  friend bool operator==(const K0Class &, const K0Class &) = default;
};

K0Class k0_class_of_rank(int n, long rank);

// Rank of the level matrix mod n-1; degree-zero projections only.
K0Class k0_class(const CuntzElement &p);

// Class of (1 - z)/2 for an involution z with degree-zero projection part.
K0Class involution_type(const CuntzElement &z);

// Involutions are conjugate in the unitary group iff their types agree.
bool conjugate_test(const CuntzElement &z1, const CuntzElement &z2);

// Explicit conjugating unitaries. Each builder returns a W that is verified
// unitary, with the stated transport identity checked exactly:
//   finite order / product of two:  W^* P_{i,j}(arg) W = E_{i,i}
//   sandwich:                       W P_{i,j}(v) W^* = P_{i,j}(w1 v w2)
StarMatrix<CuntzElement> build_conjugator_finite_order(const CuntzElement &v,
                                                       int order, int i,
                                                       int j, int dim);

StarMatrix<CuntzElement> build_conjugator_sandwich(const CuntzElement &w1,
                                                   const CuntzElement &w2,
                                                   const CuntzElement &v,
                                                   int order, int i, int j,
                                                   int dim);

StarMatrix<CuntzElement> build_conjugator_product(const CuntzElement &u,
                                                  const CuntzElement &v,
                                                  int i, int j, int dim);

// Whether W^* p W is a diagonal matrix unit, certifying that p has the class
// of the unit.
bool verify_class_one(const CuntzElement &p, const CuntzElement &w);
bool verify_class_one(const StarMatrix<CuntzElement> &p,
                      const StarMatrix<CuntzElement> &w);

// Projection with either a directly computable class (degree zero) or a
// conjugating witness certifying class one.
struct ClassifiedProjection {
  CuntzElement p;
  std::optional<CuntzElement> witness;
};

// Sum of the classes of pairwise orthogonal projections.
K0Class orthogonal_sum_class(const std::vector<ClassifiedProjection> &parts);

} // namespace cstar
