#include "cstar/element.hpp"

#include <algorithm>

#include "cstar/errors.hpp"

namespace cstar {

namespace {

thread_local long g_budget = 1'000'000;

void check_letters(int n, const Word &w) {
  for (int letter : w)
    if (letter < 1 || letter > n)
      throw IndexOutOfRange("word letter " + std::to_string(letter) +
                            " outside 1.." + std::to_string(n));
}

int degree_of(const Monomial &m) {
  return static_cast<int>(m.mu.size()) - static_cast<int>(m.nu.size());
}

// n^e, saturated just above the budget so comparisons stay valid.
long saturated_power(int n, int e, long cap) {
  long v = 1;
  for (int k = 0; k < e; ++k) {
    if (v > cap)
      return cap + 1;
    v *= n;
  }
  return v;
}

} // namespace

long expansion_budget() { return g_budget; }

void set_expansion_budget(long budget) {
  if (budget < 1)
    throw ConfigError("expansion budget must be positive");
  g_budget = budget;
}

ExpansionBudgetGuard::ExpansionBudgetGuard(long budget) : previous_(g_budget) {
  set_expansion_budget(budget);
}

ExpansionBudgetGuard::~ExpansionBudgetGuard() { g_budget = previous_; }

std::vector<std::string> ClassifyFlags::names() const {
  std::vector<std::string> out;
  if (projection)
    out.push_back("projection");
  if (self_adjoint)
    out.push_back("self_adjoint");
  if (isometry)
    out.push_back("isometry");
  if (co_isometry)
    out.push_back("co_isometry");
  if (unitary)
    out.push_back("unitary");
  if (involution)
    out.push_back("involution");
  return out;
}

CuntzElement::CuntzElement(int n) : n_(n) {
  if (n < 2)
    throw ConfigError("alphabet size must be at least 2, got " +
                      std::to_string(n));
}

void CuntzElement::accumulate(Monomial m, const ExactScalar &c) {
  if (c.is_zero())
    return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero())
    terms_.erase(it);
}

CuntzElement CuntzElement::unit(int n) {
  return scalar(n, ExactScalar(1));
}

CuntzElement CuntzElement::scalar(int n, const ExactScalar &c) {
  CuntzElement x(n);
  x.accumulate(Monomial{}, c);
  return x;
}

CuntzElement CuntzElement::generator(int n, int k) {
  CuntzElement x(n);
  check_letters(n, {k});
  x.accumulate(Monomial{{k}, {}}, ExactScalar(1));
  return x;
}

CuntzElement CuntzElement::monomial(int n, Word mu, Word nu,
                                    const ExactScalar &c) {
  CuntzElement x(n);
  check_letters(n, mu);
  check_letters(n, nu);
  x.accumulate(Monomial{std::move(mu), std::move(nu)}, c);
  return x;
}

CuntzElement CuntzElement::matrix_unit(int n, int i, int j) {
  return monomial(n, {i}, {j});
}

CuntzElement CuntzElement::word_unit(int n, const Word &mu, const Word &nu) {
  return monomial(n, mu, nu);
}

CuntzElement operator+(const CuntzElement &x, const CuntzElement &y) {
  if (x.n_ != y.n_)
    throw AlphabetMismatch("adding elements over different alphabets");
  CuntzElement out = x;
  for (const auto &[m, c] : y.terms_)
    out.accumulate(m, c);
  return out;
}

CuntzElement operator-(const CuntzElement &x, const CuntzElement &y) {
  if (x.n_ != y.n_)
    throw AlphabetMismatch("subtracting elements over different alphabets");
  CuntzElement out = x;
  for (const auto &[m, c] : y.terms_)
    out.accumulate(m, -c);
  return out;
}

CuntzElement CuntzElement::operator-() const {
  CuntzElement out(n_);
  for (const auto &[m, c] : terms_)
    out.terms_.emplace(m, -c);
  return out;
}

CuntzElement operator*(const ExactScalar &c, const CuntzElement &x) {
  CuntzElement out(x.n_);
  if (c.is_zero())
    return out;
  for (const auto &[m, coeff] : x.terms_)
    out.accumulate(m, c * coeff);
  return out;
}

CuntzElement operator*(const CuntzElement &x, const CuntzElement &y) {
  if (x.n_ != y.n_)
    throw AlphabetMismatch("multiplying elements over different alphabets");
  long pairs = static_cast<long>(x.terms_.size()) *
               static_cast<long>(y.terms_.size());
  if (pairs > expansion_budget())
    throw ExpansionBudgetExceeded("product would touch " +
                                  std::to_string(pairs) + " monomial pairs");
  CuntzElement out(x.n_);
  for (const auto &[m1, c1] : x.terms_) {
    for (const auto &[m2, c2] : y.terms_) {
      // (s_mu1 s_nu1^*)(s_mu2 s_nu2^*): the inner s_nu1^* s_mu2 collapses by
      // the Cuntz relations to a word or to zero.
      if (word_is_prefix(m1.nu, m2.mu)) {
        Word rest(m2.mu.begin() + static_cast<long>(m1.nu.size()),
                  m2.mu.end());
        out.accumulate(Monomial{word_concat(m1.mu, rest), m2.nu}, c1 * c2);
      } else if (word_is_prefix(m2.mu, m1.nu)) {
        Word rest(m1.nu.begin() + static_cast<long>(m2.mu.size()),
                  m1.nu.end());
        out.accumulate(Monomial{m1.mu, word_concat(m2.nu, rest)}, c1 * c2);
      }
    }
  }
  return out.normalized();
}

CuntzElement CuntzElement::adjoint() const {
  CuntzElement out(n_);
  for (const auto &[m, c] : terms_)
    out.terms_.emplace(Monomial{m.nu, m.mu}, c.conj());
  return out;
}

CuntzElement CuntzElement::normalized() const {
  // Maximal nu-length per degree class.
  std::map<int, int> level;
  for (const auto &[m, c] : terms_) {
    int d = degree_of(m);
    auto it = level.find(d);
    int nu_len = static_cast<int>(m.nu.size());
    if (it == level.end())
      level[d] = nu_len;
    else
      it->second = std::max(it->second, nu_len);
  }

  const long budget = expansion_budget();
  long projected = 0;
  for (const auto &[m, c] : terms_) {
    int grow = level[degree_of(m)] - static_cast<int>(m.nu.size());
    projected += saturated_power(n_, grow, budget);
    if (projected > budget)
      throw ExpansionBudgetExceeded(
          "normalization would expand past the budget of " +
          std::to_string(budget) + " terms");
  }

  CuntzElement out(n_);
  for (const auto &[m, c] : terms_) {
    int grow = level[degree_of(m)] - static_cast<int>(m.nu.size());
    if (grow == 0) {
      out.accumulate(m, c);
      continue;
    }
    for_each_word(n_, grow, [&](const Word &w) {
      out.accumulate(Monomial{word_concat(m.mu, w), word_concat(m.nu, w)}, c);
    });
  }
  return out;
}

bool equals(const CuntzElement &x, const CuntzElement &y) {
  if (x.n() != y.n())
    throw AlphabetMismatch("comparing elements over different alphabets");
  return (x - y).normalized().is_syntactic_zero();
}

ClassifyFlags CuntzElement::classify() const {
  const CuntzElement one = unit(n_);
  const CuntzElement adj = adjoint();
  ClassifyFlags f;
  f.self_adjoint = equals(adj, *this);
  f.isometry = equals(adj * *this, one);
  f.co_isometry = equals(*this * adj, one);
  f.unitary = f.isometry && f.co_isometry;
  f.projection = f.self_adjoint && equals(*this * *this, *this);
  f.involution = f.self_adjoint && f.unitary;
  return f;
}

std::optional<ExactScalar> as_scalar(const CuntzElement &x) {
  CuntzElement nf = x.normalized();
  if (nf.is_syntactic_zero())
    return ExactScalar(0);
  const auto &[m, c] = *nf.terms().begin();
  if (m.mu != m.nu)
    return std::nullopt;
  if (equals(nf, CuntzElement::scalar(x.n(), c)))
    return c;
  return std::nullopt;
}

CuntzElement involution_from_projection(const CuntzElement &p) {
  if (!p.classify().projection)
    throw NotAProjection("involution builder requires a projection");
  return CuntzElement::unit(p.n()) - (ExactScalar(2) * p);
}

std::string CuntzElement::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < m.mu.size(); ++k) {
      if (!mono.empty())
        mono += "*";
      mono += "s" + std::to_string(m.mu[k]);
    }
    for (std::size_t k = m.nu.size(); k-- > 0;) {
      if (!mono.empty())
        mono += "*";
      mono += "s" + std::to_string(m.nu[k]) + "'";
    }

    // Pull a leading sign out of single-component coefficients so terms
    // join with " - " instead of "+ -".
    bool negative = false;
    std::string coeff_str;
    if (c.component_count() == 1) {
      ExactScalar mag = c;
      auto comps = c.components();
      for (const auto &r : comps)
        if (!r.is_zero() && r.is_negative()) {
          negative = true;
          mag = -c;
        }
      coeff_str = mag.str();
    } else {
      coeff_str = "(" + c.str() + ")";
    }

    std::string piece;
    if (mono.empty())
      piece = coeff_str;
    else if (coeff_str == "1")
      piece = mono;
    else
      piece = coeff_str + "*" + mono;

    if (first) {
      out = (negative ? "-" : "") + piece;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + piece;
    }
  }
  return out;
}

} // namespace cstar
