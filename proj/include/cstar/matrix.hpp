#pragma once

#include <string>
#include <vector>

#include "cstar/element.hpp"
#include "cstar/errors.hpp"

namespace cstar {

// Ring hooks used by StarMatrix. Every entry ring provides these four
// free functions; matrices over a ring are again such a ring.
inline ExactScalar zero_like(const ExactScalar &) { return ExactScalar(0); }
inline ExactScalar one_like(const ExactScalar &) { return ExactScalar(1); }
inline ExactScalar ring_adjoint(const ExactScalar &x) { return x.conj(); }
inline bool ring_equal(const ExactScalar &x, const ExactScalar &y) {
  return x == y;
}

inline CuntzElement zero_like(const CuntzElement &x) {
  return CuntzElement::zero(x.n());
}
inline CuntzElement one_like(const CuntzElement &x) {
  return CuntzElement::unit(x.n());
}
inline CuntzElement ring_adjoint(const CuntzElement &x) { return x.adjoint(); }
inline bool ring_equal(const CuntzElement &x, const CuntzElement &y) {
  return equals(x, y);
}

// Square matrix over a *-ring, row-major, immutable dimension. Entry
// accessors are 0-based; all domain-level constructors below speak the
// 1-based index language of matrix units.
template <typename R> class StarMatrix {
  int dim_;
  std::vector<R> e_;

public:
  StarMatrix(int dim, const R &zero)
      : dim_(dim), e_(static_cast<std::size_t>(dim) * dim, zero) {
    if (dim < 1)
      throw DimensionMismatch("matrix dimension must be at least 1");
  }

  static StarMatrix identity(int dim, const R &one) {
    StarMatrix m(dim, zero_like(one));
    for (int k = 0; k < dim; ++k)
      m.at(k, k) = one;
    return m;
  }

  // E_{i,j} with 1-based indices.
  static StarMatrix unit_matrix(int dim, int i, int j, const R &one) {
    StarMatrix m(dim, zero_like(one));
    m.at(i - 1, j - 1) = one;
    return m;
  }

  int dim() const noexcept { return dim_; }

  R &at(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
  const R &at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * dim_ + j];
  }

  friend StarMatrix operator+(const StarMatrix &x, const StarMatrix &y) {
    if (x.dim_ != y.dim_)
      throw DimensionMismatch("adding matrices of different dimensions");
    StarMatrix out = x;
    for (std::size_t k = 0; k < out.e_.size(); ++k)
      out.e_[k] = out.e_[k] + y.e_[k];
    return out;
  }

  friend StarMatrix operator-(const StarMatrix &x, const StarMatrix &y) {
    if (x.dim_ != y.dim_)
      throw DimensionMismatch("subtracting matrices of different dimensions");
    StarMatrix out = x;
    for (std::size_t k = 0; k < out.e_.size(); ++k)
      out.e_[k] = out.e_[k] - y.e_[k];
    return out;
  }

  friend StarMatrix operator*(const StarMatrix &x, const StarMatrix &y) {
    if (x.dim_ != y.dim_)
      throw DimensionMismatch("multiplying matrices of different dimensions");
    StarMatrix out(x.dim_, zero_like(x.e_.front()));
    for (int i = 0; i < x.dim_; ++i)
      for (int j = 0; j < x.dim_; ++j) {
        R acc = zero_like(x.e_.front());
        for (int k = 0; k < x.dim_; ++k)
          acc = acc + x.at(i, k) * y.at(k, j);
        out.at(i, j) = acc;
      }
    return out;
  }

  template <typename S>
  friend StarMatrix operator*(const S &c, const StarMatrix &x) {
    StarMatrix out = x;
    for (auto &entry : out.e_)
      entry = c * entry;
    return out;
  }

  StarMatrix adjoint() const {
    StarMatrix out(dim_, zero_like(e_.front()));
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        out.at(i, j) = ring_adjoint(at(j, i));
    return out;
  }
};

template <typename R>
StarMatrix<R> zero_like(const StarMatrix<R> &m) {
  return StarMatrix<R>(m.dim(), zero_like(m.at(0, 0)));
}

template <typename R>
StarMatrix<R> one_like(const StarMatrix<R> &m) {
  return StarMatrix<R>::identity(m.dim(), one_like(m.at(0, 0)));
}

template <typename R>
StarMatrix<R> ring_adjoint(const StarMatrix<R> &m) {
  return m.adjoint();
}

template <typename R>
bool ring_equal(const StarMatrix<R> &x, const StarMatrix<R> &y) {
  if (x.dim() != y.dim())
    return false;
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j)
      if (!ring_equal(x.at(i, j), y.at(i, j)))
        return false;
  return true;
}

template <typename R>
bool equals(const StarMatrix<R> &x, const StarMatrix<R> &y) {
  if (x.dim() != y.dim())
    throw DimensionMismatch("comparing matrices of different dimensions");
  return ring_equal(x, y);
}

template <typename R> ClassifyFlags classify(const StarMatrix<R> &m) {
  const StarMatrix<R> one = one_like(m);
  const StarMatrix<R> adj = m.adjoint();
  ClassifyFlags f;
  f.self_adjoint = ring_equal(adj, m);
  f.isometry = ring_equal(adj * m, one);
  f.co_isometry = ring_equal(m * adj, one);
  f.unitary = f.isometry && f.co_isometry;
  f.projection = f.self_adjoint && ring_equal(m * m, m);
  f.involution = f.self_adjoint && f.unitary;
  return f;
}

// Dye projection P_{i,j}(a) in M_dim over the element ring (1-based i != j).
// Requires a a^* to be a scalar multiple of 1; the kernel (1 + a a^*)^{-1}
// is then the field inverse of 1 + lambda.
inline StarMatrix<CuntzElement> dye(int i, int j, const CuntzElement &a,
                                    int dim) {
  if (i < 1 || i > dim || j < 1 || j > dim)
    throw IndexOutOfRange("dye indices must lie in 1..dim");
  if (i == j)
    throw IndexOutOfRange("dye requires i != j");
  const CuntzElement a_star = a.adjoint();
  std::optional<ExactScalar> lambda = as_scalar(a * a_star);
  if (!lambda)
    throw NonScalarKernel("a*adjoint(a) is not a scalar multiple of 1");
  const ExactScalar one_plus = ExactScalar(1) + *lambda;
  if (one_plus.is_zero())
    throw SingularKernel("1 + a*adjoint(a) is zero");
  const ExactScalar k = one_plus.inv();

  StarMatrix<CuntzElement> p(dim, CuntzElement::zero(a.n()));
  p.at(i - 1, i - 1) = CuntzElement::scalar(a.n(), k);
  p.at(i - 1, j - 1) = k * a;
  p.at(j - 1, i - 1) = k * a_star;
  p.at(j - 1, j - 1) = k * (a_star * a);
  return p;
}

template <typename R>
StarMatrix<R> involution_from_projection(const StarMatrix<R> &p) {
  if (!classify(p).projection)
    throw NotAProjection("involution builder requires a projection");
  return one_like(p) - (p + p);
}

// Indexed family {e_{i,j}} expected to satisfy the matrix-unit axioms.
template <typename R> struct MatrixUnitSystem {
  int size;
  std::vector<R> units; // row-major, units[(i-1)*size + (j-1)]
  R one;

  const R &unit(int i, int j) const {
    return units[static_cast<std::size_t>(i - 1) * size + (j - 1)];
  }
};

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  std::string witness; // first failing index tuple, empty on pass
};

struct MatrixUnitReport {
  std::vector<AxiomResult> axioms;

  bool all_pass() const {
    for (const auto &a : axioms)
      if (!a.pass)
        return false;
    return true;
  }
};

template <typename R>
MatrixUnitReport validate_matrix_units(const MatrixUnitSystem<R> &sys) {
  MatrixUnitReport report;
  const R zero = zero_like(sys.one);
  const int n = sys.size;

  AxiomResult product{"product", true, ""};
  for (int i = 1; i <= n && product.pass; ++i)
    for (int j = 1; j <= n && product.pass; ++j)
      for (int k = 1; k <= n && product.pass; ++k)
        for (int l = 1; l <= n && product.pass; ++l) {
          const R lhs = sys.unit(i, j) * sys.unit(k, l);
          const R &rhs = (j == k) ? sys.unit(i, l) : zero;
          if (!ring_equal(lhs, rhs)) {
            product.pass = false;
            product.witness = "(" + std::to_string(i) + "," +
                              std::to_string(j) + ")x(" + std::to_string(k) +
                              "," + std::to_string(l) + ")";
          }
        }
  report.axioms.push_back(product);

  AxiomResult adj{"adjoint", true, ""};
  for (int i = 1; i <= n && adj.pass; ++i)
    for (int j = 1; j <= n && adj.pass; ++j)
      if (!ring_equal(ring_adjoint(sys.unit(i, j)), sys.unit(j, i))) {
        adj.pass = false;
        adj.witness = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
  report.axioms.push_back(adj);

  AxiomResult sum{"unit_sum", true, ""};
  R total = zero;
  for (int i = 1; i <= n; ++i)
    total = total + sys.unit(i, i);
  if (!ring_equal(total, sys.one)) {
    sum.pass = false;
    sum.witness = "sum of diagonal units";
  }
  report.axioms.push_back(sum);

  AxiomResult diag{"diagonal_projections", true, ""};
  for (int i = 1; i <= n && diag.pass; ++i) {
    const R &e = sys.unit(i, i);
    if (!ring_equal(e * e, e) || !ring_equal(ring_adjoint(e), e)) {
      diag.pass = false;
      diag.witness = "(" + std::to_string(i) + "," + std::to_string(i) + ")";
    }
  }
  report.axioms.push_back(diag);

  return report;
}

// The canonical system e_{mu,nu} = s_mu s_nu^* built from level-k words;
// level 1 is the familiar e_{i,j} = s_i s_j^*.
inline MatrixUnitSystem<CuntzElement> cuntz_matrix_units(int n,
                                                         int level = 1) {
  if (level < 1)
    throw ConfigError("matrix-unit level must be at least 1");
  std::vector<Word> words;
  for_each_word(n, level, [&](const Word &w) { words.push_back(w); });
  MatrixUnitSystem<CuntzElement> sys{static_cast<int>(words.size()),
                                     {},
                                     CuntzElement::unit(n)};
  for (const Word &mu : words)
    for (const Word &nu : words)
      sys.units.push_back(CuntzElement::word_unit(n, mu, nu));
  return sys;
}

// Standard units E_{i,j} of the scalar matrix algebra.
inline MatrixUnitSystem<StarMatrix<ExactScalar>>
standard_matrix_units(int dim) {
  MatrixUnitSystem<StarMatrix<ExactScalar>> sys{
      dim, {}, StarMatrix<ExactScalar>::identity(dim, ExactScalar(1))};
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j)
      sys.units.push_back(
          StarMatrix<ExactScalar>::unit_matrix(dim, i, j, ExactScalar(1)));
  return sys;
}

} // namespace cstar
