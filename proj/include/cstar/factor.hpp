#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cstar/ktheory.hpp"

namespace cstar {

// Involution 1 - 2*eta(P_{i,j}(omega)) attached to a unitary omega. The
// word isomorphism is taken at the smallest level whose matrix-unit system
// is large enough to hold the indices (level 1 unless max(i,j) > n).
struct InvolutionFactor {
  int i = 1;
  int j = 2;
  int level = 1;
  CuntzElement omega;
  CuntzElement element;
};

InvolutionFactor dye_involution(int i, int j, const CuntzElement &omega);

enum class DiagVariant { OneTwo, OneThree };

// The 3x3 block identity behind the two-involution factors: for unitary
// alpha, (1 - 2 P_{1,2}(-alpha))(1 - 2 P_{1,2}(-1)) = diag(alpha, alpha^*, 1)
// and the (1,3) variant gives diag(alpha, 1, alpha^*). Checked exactly in
// M_3 over the element ring.
bool diag_identity_check(const CuntzElement &alpha, DiagVariant variant);

struct FactorEntry {
  CuntzElement element;
  bool dye_form = false;
  int i = 0;
  int j = 0;
  std::optional<CuntzElement> omega;
};

struct Factorization {
  CuntzElement u;
  std::vector<FactorEntry> factors; // ordered; product equals u
};

// Forward assembly of the eleven-factor decomposition: with unitaries alpha,
// gamma and involutions z1, z2, z3 it forms the eight Dye-type brackets at
// (1,2) and (1,3) and returns u = z1 * (b1..b8) * z2 * z3 together with the
// ordered factor list. Every bracket is verified to be an involution and u
// to be unitary.
Factorization assemble_unitary_factorization(const CuntzElement &alpha,
                                             const CuntzElement &gamma,
                                             const CuntzElement &z1,
                                             const CuntzElement &z2,
                                             const CuntzElement &z3);

struct FactorClaim {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct FactorizationReport {
  std::vector<FactorClaim> claims;

  bool all_pass() const {
    for (const auto &c : claims)
      if (!c.pass)
        return false;
    return true;
  }
};

// Checks (a) each factor is an involution, (b) the ordered product equals u,
// (c) each Dye-form factor has the unit class, hence all of them are
// pairwise conjugate and conjugate to -1.
FactorizationReport verify_factorization(const CuntzElement &u,
                                         const std::vector<FactorEntry> &factors);

} // namespace cstar
