#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cstar/scalar.hpp"
#include "cstar/word.hpp"

namespace cstar {

// Per-thread cap on the number of terms a normalization step may create.
// Exceeding it raises ExpansionBudgetExceeded; there is no silent truncation.
long expansion_budget();
void set_expansion_budget(long budget);

class ExpansionBudgetGuard {
  long previous_;

public:
  explicit ExpansionBudgetGuard(long budget);
  ~ExpansionBudgetGuard();
  ExpansionBudgetGuard(const ExpansionBudgetGuard &) = delete;
  ExpansionBudgetGuard &operator=(const ExpansionBudgetGuard &) = delete;
};

struct Monomial {
  Word mu, nu; // stands for s_mu s_nu^*
  friend auto operator<=>(const Monomial &, const Monomial &) = default;
};

struct ClassifyFlags {
  bool self_adjoint = false;
  bool projection = false;
  bool isometry = false;
  bool co_isometry = false;
  bool unitary = false;
  bool involution = false;

  std::vector<std::string> names() const;
  friend bool operator==(const ClassifyFlags &, const ClassifyFlags &) = default;
};

// Finite formal sum sum_{mu,nu} c_{mu,nu} s_mu s_nu^* over the alphabet
// {1..n}, n >= 2. Values are immutable after construction; every operation
// returns a fresh element. Stored coefficients are never zero.
class CuntzElement {
  int n_;
  std::map<Monomial, ExactScalar> terms_;

  void accumulate(Monomial m, const ExactScalar &c);

public:
  CuntzElement() : n_(2) {} // zero element over the smallest alphabet
  explicit CuntzElement(int n);

  static CuntzElement zero(int n) { return CuntzElement(n); }
  static CuntzElement unit(int n);
  static CuntzElement scalar(int n, const ExactScalar &c);
  static CuntzElement generator(int n, int k); // s_k
  static CuntzElement monomial(int n, Word mu, Word nu,
                               const ExactScalar &c = ExactScalar(1));
  static CuntzElement matrix_unit(int n, int i, int j); // e_{i,j} = s_i s_j^*
  // Level-k unit e_{mu,nu} = s_mu s_nu^* for |mu| = |nu| = k.
  static CuntzElement word_unit(int n, const Word &mu, const Word &nu);

  int n() const noexcept { return n_; }
  const std::map<Monomial, ExactScalar> &terms() const noexcept {
    return terms_;
  }
  bool is_syntactic_zero() const noexcept { return terms_.empty(); }

  friend CuntzElement operator+(const CuntzElement &x, const CuntzElement &y);
  friend CuntzElement operator-(const CuntzElement &x, const CuntzElement &y);
  friend CuntzElement operator*(const CuntzElement &x, const CuntzElement &y);
  friend CuntzElement operator*(const ExactScalar &c, const CuntzElement &x);
  friend CuntzElement operator*(const CuntzElement &x, const ExactScalar &c) {
    return c * x;
  }
  CuntzElement operator-() const;

  CuntzElement adjoint() const;

  // Canonical form: terms are grouped by degree |mu| - |nu|; within each
  // degree every monomial is expanded to the maximal nu-length present,
  // using s_mu s_nu^* = sum_{|w|=L-|nu|} s_{mu w} s_{nu w}^*. Like terms are
  // merged and zero coefficients dropped. Idempotent.
  CuntzElement normalized() const;

  ClassifyFlags classify() const;

  // Expression-language rendering, parseable back (round-trips up to
  // normalization).
  std::string str() const;
};

bool equals(const CuntzElement &x, const CuntzElement &y);

// If x equals c*1 for a scalar c, returns c.
std::optional<ExactScalar> as_scalar(const CuntzElement &x);

// 1 - 2p for a projection p; throws NotAProjection otherwise.
CuntzElement involution_from_projection(const CuntzElement &p);

} // namespace cstar
