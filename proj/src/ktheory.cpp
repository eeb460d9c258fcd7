#include "cstar/ktheory.hpp"

#include <stdexcept>

namespace cstar {

namespace {

// Expands every degree-zero term of x to the requested word length.
CuntzElement expand_to_level(const CuntzElement &x, int level) {
  CuntzElement out = CuntzElement::zero(x.n());
  for (const auto &[m, c] : x.terms()) {
    int grow = level - static_cast<int>(m.nu.size());
    if (grow == 0) {
      out = out + CuntzElement::monomial(x.n(), m.mu, m.nu, c);
    } else {
      for_each_word(x.n(), grow, [&](const Word &w) {
        out = out + CuntzElement::monomial(x.n(), word_concat(m.mu, w),
                                           word_concat(m.nu, w), c);
      });
    }
  }
  return out;
}

} // namespace

AFCoreMatrix to_af_core(const CuntzElement &x, std::optional<int> level) {
  const CuntzElement nf = x.normalized();
  int natural = 0;
  for (const auto &[m, c] : nf.terms()) {
    if (m.mu.size() != m.nu.size())
      throw NotDegreeZero("element has a term of degree " +
                          std::to_string(static_cast<int>(m.mu.size()) -
                                         static_cast<int>(m.nu.size())));
    natural = static_cast<int>(m.nu.size()); // common after normalization
  }
  int k = level.value_or(natural);
  if (k < natural)
    throw DimensionMismatch("requested level below the element's own level");
  const CuntzElement at_level =
      (k == natural) ? nf : expand_to_level(nf, k);

  AFCoreMatrix out;
  out.n = x.n();
  out.level = k;
  long dim = 1;
  for (int e = 0; e < k; ++e)
    dim *= x.n();
  out.mat = StarMatrix<ExactScalar>(static_cast<int>(dim), ExactScalar(0));
  for (const auto &[m, c] : at_level.terms())
    out.mat.at(static_cast<int>(word_index(m.mu, x.n())),
               static_cast<int>(word_index(m.nu, x.n()))) = c;
  return out;
}

int exact_rank(const StarMatrix<ExactScalar> &m) {
  StarMatrix<ExactScalar> a = m;
  const int dim = a.dim();
  int rank = 0;
  for (int col = 0; col < dim && rank < dim; ++col) {
    int pivot = -1;
    for (int row = rank; row < dim; ++row)
      if (!a.at(row, col).is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0)
      continue;
    if (pivot != rank)
      for (int j = 0; j < dim; ++j) {
        ExactScalar tmp = a.at(pivot, j);
        a.at(pivot, j) = a.at(rank, j);
        a.at(rank, j) = tmp;
      }
    const ExactScalar inv = a.at(rank, col).inv();
    for (int row = rank + 1; row < dim; ++row) {
      if (a.at(row, col).is_zero())
        continue;
      const ExactScalar factor = a.at(row, col) * inv;
      for (int j = col; j < dim; ++j)
        a.at(row, j) = a.at(row, j) - factor * a.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

K0Class k0_class_of_rank(int n, long rank) {
  const int modulus = n - 1;
  K0Class c;
  c.n = n;
  c.residue = modulus > 0 ? static_cast<int>(((rank % modulus) + modulus) %
                                             modulus)
                          : 0;
  return c;
}

K0Class k0_class(const CuntzElement &p) {
  if (!p.classify().projection)
    throw NotAProjection("k0_class requires a projection");
  const AFCoreMatrix core = to_af_core(p);
  return k0_class_of_rank(p.n(), exact_rank(core.mat));
}

K0Class involution_type(const CuntzElement &z) {
  if (!z.classify().involution)
    throw NotAnInvolution("involution_type requires a self-adjoint unitary");
  const CuntzElement p =
      ExactScalar::half() * (CuntzElement::unit(z.n()) - z);
  return k0_class(p);
}

bool conjugate_test(const CuntzElement &z1, const CuntzElement &z2) {
  if (z1.n() != z2.n())
    throw AlphabetMismatch("conjugate_test over different alphabets");
  return involution_type(z1) == involution_type(z2);
}

namespace {

void check_unitary(const CuntzElement &u, const char *name) {
  if (!u.classify().unitary)
    throw NotUnitary(std::string(name) + " is not unitary");
}

void check_order(const CuntzElement &v, int order) {
  if (order < 1)
    throw OrderNotVerified("order must be positive");
  CuntzElement power = CuntzElement::unit(v.n());
  for (int k = 0; k < order; ++k)
    power = power * v;
  if (!equals(power, CuntzElement::unit(v.n())))
    throw OrderNotVerified("v^" + std::to_string(order) + " differs from 1");
}

// (1/sqrt2) (v at (i,i), v at (i,j), 1 at (j,i), -1 at (j,j)) + identity
// elsewhere. Conjugates P_{i,j}(v) onto E_{i,i} for any unitary v.
StarMatrix<CuntzElement> hadamard_like_conjugator(const CuntzElement &v,
                                                  int i, int j, int dim) {
  const int n = v.n();
  const ExactScalar c = ExactScalar::inv_sqrt2();
  StarMatrix<CuntzElement> w(dim, CuntzElement::zero(n));
  for (int k = 1; k <= dim; ++k)
    if (k != i && k != j)
      w.at(k - 1, k - 1) = CuntzElement::unit(n);
  w.at(i - 1, i - 1) = c * v;
  w.at(i - 1, j - 1) = c * v;
  w.at(j - 1, i - 1) = CuntzElement::scalar(n, c);
  w.at(j - 1, j - 1) = CuntzElement::scalar(n, -c);
  return w;
}

void check_indices(int i, int j, int dim) {
  if (i < 1 || i > dim || j < 1 || j > dim || i == j)
    throw IndexOutOfRange("conjugator indices must be distinct and in 1..dim");
}

} // namespace

StarMatrix<CuntzElement> build_conjugator_finite_order(const CuntzElement &v,
                                                       int order, int i,
                                                       int j, int dim) {
  check_indices(i, j, dim);
  check_unitary(v, "v");
  check_order(v, order);
  StarMatrix<CuntzElement> w = hadamard_like_conjugator(v, i, j, dim);
  if (!classify(w).unitary)
    throw NotUnitary("conjugator failed the unitarity check");
  if (!ring_equal(w.adjoint() * dye(i, j, v, dim) * w,
                  StarMatrix<CuntzElement>::unit_matrix(
                      dim, i, i, CuntzElement::unit(v.n()))))
    throw std::logic_error("conjugator transport identity failed");
  return w;
}

StarMatrix<CuntzElement> build_conjugator_sandwich(const CuntzElement &w1,
                                                   const CuntzElement &w2,
                                                   const CuntzElement &v,
                                                   int order, int i, int j,
                                                   int dim) {
  check_indices(i, j, dim);
  check_unitary(w1, "w1");
  check_unitary(w2, "w2");
  check_unitary(v, "v");
  check_order(v, order);
  const int n = v.n();
  StarMatrix<CuntzElement> w(dim, CuntzElement::zero(n));
  for (int k = 1; k <= dim; ++k)
    if (k != i && k != j)
      w.at(k - 1, k - 1) = CuntzElement::unit(n);
  w.at(i - 1, i - 1) = w1;
  w.at(j - 1, j - 1) = w2.adjoint();
  if (!classify(w).unitary)
    throw NotUnitary("conjugator failed the unitarity check");
  if (!ring_equal(w * dye(i, j, v, dim) * w.adjoint(),
                  dye(i, j, (w1 * v * w2).normalized(), dim)))
    throw std::logic_error("sandwich transport identity failed");
  return w;
}

StarMatrix<CuntzElement> build_conjugator_product(const CuntzElement &u,
                                                  const CuntzElement &v,
                                                  int i, int j, int dim) {
  check_indices(i, j, dim);
  if (!u.classify().involution)
    throw NotAnInvolution("u must be a self-adjoint unitary");
  if (!v.classify().involution)
    throw NotAnInvolution("v must be a self-adjoint unitary");
  const CuntzElement uv = (u * v).normalized();
  StarMatrix<CuntzElement> w = hadamard_like_conjugator(uv, i, j, dim);
  if (!classify(w).unitary)
    throw NotUnitary("conjugator failed the unitarity check");
  if (!ring_equal(w.adjoint() * dye(i, j, uv, dim) * w,
                  StarMatrix<CuntzElement>::unit_matrix(
                      dim, i, i, CuntzElement::unit(u.n()))))
    throw std::logic_error("conjugator transport identity failed");
  return w;
}

bool verify_class_one(const CuntzElement &p, const CuntzElement &w) {
  if (!w.classify().unitary)
    throw NotUnitary("verify_class_one witness is not unitary");
  const CuntzElement conj = (w.adjoint() * p * w).normalized();
  for (int i = 1; i <= p.n(); ++i)
    if (equals(conj, CuntzElement::matrix_unit(p.n(), i, i)))
      return true;
  return false;
}

bool verify_class_one(const StarMatrix<CuntzElement> &p,
                      const StarMatrix<CuntzElement> &w) {
  if (!classify(w).unitary)
    throw NotUnitary("verify_class_one witness is not unitary");
  const StarMatrix<CuntzElement> conj = w.adjoint() * p * w;
  const CuntzElement one = one_like(p.at(0, 0));
  for (int i = 1; i <= p.dim(); ++i)
    if (ring_equal(conj,
                   StarMatrix<CuntzElement>::unit_matrix(p.dim(), i, i, one)))
      return true;
  return false;
}

K0Class orthogonal_sum_class(const std::vector<ClassifiedProjection> &parts) {
  if (parts.empty())
    throw ConfigError("orthogonal_sum_class needs at least one part");
  const int n = parts.front().p.n();
  for (std::size_t a = 0; a < parts.size(); ++a) {
    if (parts[a].p.n() != n)
      throw AlphabetMismatch("parts over different alphabets");
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      if (!equals(parts[a].p * parts[b].p, CuntzElement::zero(n)))
        throw NotOrthogonal("parts " + std::to_string(a + 1) + " and " +
                            std::to_string(b + 1) + " are not orthogonal");
  }
  long total = 0;
  for (const auto &part : parts) {
    if (part.witness) {
      if (!verify_class_one(part.p, *part.witness))
        throw NotUnitary("witness does not certify a unit class");
      total += 1;
    } else {
      total += k0_class(part.p).residue;
    }
  }
  return k0_class_of_rank(n, total);
}

} // namespace cstar
