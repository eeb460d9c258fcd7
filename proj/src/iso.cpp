#include "cstar/iso.hpp"

#include <stdexcept>

namespace cstar {

namespace {

std::vector<Word> level_words(int n, int level) {
  std::vector<Word> words;
  for_each_word(n, level, [&](const Word &w) { words.push_back(w); });
  return words;
}

} // namespace

CuntzElement eta_level(const StarMatrix<CuntzElement> &m, int level) {
  const int n = m.at(0, 0).n();
  const std::vector<Word> words = level_words(n, level);
  if (m.dim() != static_cast<int>(words.size()))
    throw DimensionMismatch("matrix dimension " + std::to_string(m.dim()) +
                            " does not match the level-" +
                            std::to_string(level) + " word count");
  CuntzElement acc = CuntzElement::zero(n);
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      const CuntzElement &entry = m.at(i, j);
      if (entry.is_syntactic_zero())
        continue;
      acc = acc + CuntzElement::monomial(n, words[static_cast<std::size_t>(i)],
                                         {}) *
                      entry *
                      CuntzElement::monomial(
                          n, {}, words[static_cast<std::size_t>(j)]);
    }
  return acc.normalized();
}

CuntzElement eta(const StarMatrix<CuntzElement> &m) {
  const int n = m.at(0, 0).n();
  if (m.dim() != n)
    throw DimensionMismatch("eta expects an n x n matrix over O_n");
  return eta_level(m, 1);
}

StarMatrix<CuntzElement> eta_inv_level(const CuntzElement &x, int level) {
  const int n = x.n();
  const std::vector<Word> words = level_words(n, level);
  const int dim = static_cast<int>(words.size());
  StarMatrix<CuntzElement> m(dim, CuntzElement::zero(n));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m.at(i, j) =
          CuntzElement::monomial(n, {}, words[static_cast<std::size_t>(i)]) *
          x *
          CuntzElement::monomial(n, words[static_cast<std::size_t>(j)], {});
  return m;
}

StarMatrix<CuntzElement> eta_inv(const CuntzElement &x) {
  return eta_inv_level(x, 1);
}

CuntzElement eta1(const StarMatrix<CuntzElement> &m) {
  const int n = m.at(0, 0).n();
  const int k = m.dim();
  if (k > n)
    throw DimensionMismatch("eta1 supports k <= n");
  const CuntzElement e11 = CuntzElement::matrix_unit(n, 1, 1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (!equals(e11 * m.at(i, j) * e11, m.at(i, j)))
        throw NotInCorner("entry (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) +
                          ") does not lie in the e11 corner");
  CuntzElement acc = CuntzElement::zero(n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (m.at(i, j).is_syntactic_zero())
        continue;
      acc = acc + CuntzElement::matrix_unit(n, i + 1, 1) * m.at(i, j) *
                      CuntzElement::matrix_unit(n, 1, j + 1);
    }
  return acc.normalized();
}

StarMatrix<CuntzElement> zeta(const CuntzElement &x, int k) {
  const int n = x.n();
  if (k < 1 || k > n)
    throw DimensionMismatch("zeta supports 1 <= k <= n");
  CuntzElement r1 = CuntzElement::zero(n);
  for (int i = 1; i <= k; ++i)
    r1 = r1 + CuntzElement::matrix_unit(n, i, i);
  if (!equals(r1 * x * r1, x))
    throw NotInReducedAlgebra("zeta input does not lie in r1 A r1");
  StarMatrix<CuntzElement> m(k, CuntzElement::zero(n));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      m.at(i - 1, j - 1) = CuntzElement::matrix_unit(n, 1, i) * x *
                           CuntzElement::matrix_unit(n, j, 1);
  return m;
}

CuntzElement corner_iso(const CuntzElement &v, const CuntzElement &x) {
  if (v.n() != x.n())
    throw AlphabetMismatch("corner_iso arguments over different alphabets");
  const CuntzElement v_star = v.adjoint();
  if (!equals(v * v_star, CuntzElement::unit(v.n())))
    throw NotCoIsometry("corner_iso requires v adjoint(v) = 1");
  const CuntzElement range = v_star * v;
  if (!range.classify().projection)
    throw NotCoIsometry("corner_iso requires adjoint(v) v to be a projection");
  return (v_star * x * v).normalized();
}

std::vector<CuntzElement> decompose_projection(const CuntzElement &v) {
  const int n = v.n();
  const CuntzElement v_star = v.adjoint();
  if (!equals(v * v_star, CuntzElement::unit(n)))
    throw NotCoIsometry("decompose_projection requires v adjoint(v) = 1");
  const CuntzElement p = (v_star * v).normalized();

  std::vector<CuntzElement> parts;
  CuntzElement total = CuntzElement::zero(n);
  for (int i = 1; i <= n; ++i) {
    CuntzElement part =
        (v_star * CuntzElement::matrix_unit(n, i, i) * v).normalized();
    total = total + part;
    parts.push_back(std::move(part));
  }

  // The construction guarantees these; check anyway so callers can rely on
  // the postcondition unconditionally.
  if (!equals(total, p))
    throw std::logic_error("projection pieces do not sum to adjoint(v) v");
  for (std::size_t a = 0; a < parts.size(); ++a) {
    if (!parts[a].classify().projection)
      throw std::logic_error("projection piece is not a projection");
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      if (!equals(parts[a] * parts[b], CuntzElement::zero(n)))
        throw std::logic_error("projection pieces are not orthogonal");
  }
  return parts;
}

} // namespace cstar
