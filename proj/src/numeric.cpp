#include "cstar/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace cstar {

ComplexMatrix::ComplexMatrix(int dim, double tol)
    : dim_(dim), e_(static_cast<std::size_t>(dim) * dim), tol_(tol) {
  if (dim < 1)
    throw DimensionMismatch("matrix dimension must be at least 1");
}

ComplexMatrix ComplexMatrix::identity(int dim, double tol) {
  ComplexMatrix m(dim, tol);
  for (int k = 0; k < dim; ++k)
    m.at(k, k) = 1.0;
  return m;
}

ComplexMatrix operator+(const ComplexMatrix &x, const ComplexMatrix &y) {
  if (x.dim_ != y.dim_)
    throw DimensionMismatch("adding matrices of different dimensions");
  ComplexMatrix out = x;
  for (std::size_t k = 0; k < out.e_.size(); ++k)
    out.e_[k] += y.e_[k];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix &x, const ComplexMatrix &y) {
  if (x.dim_ != y.dim_)
    throw DimensionMismatch("subtracting matrices of different dimensions");
  ComplexMatrix out = x;
  for (std::size_t k = 0; k < out.e_.size(); ++k)
    out.e_[k] -= y.e_[k];
  return out;
}

ComplexMatrix operator*(const ComplexMatrix &x, const ComplexMatrix &y) {
  if (x.dim_ != y.dim_)
    throw DimensionMismatch("multiplying matrices of different dimensions");
  ComplexMatrix out(x.dim_, std::max(x.tol_, y.tol_));
  for (int i = 0; i < x.dim_; ++i)
    for (int j = 0; j < x.dim_; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < x.dim_; ++k)
        acc += x.at(i, k) * y.at(k, j);
      out.at(i, j) = acc;
    }
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_, tol_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      out.at(i, j) = std::conj(at(j, i));
  return out;
}

double ComplexMatrix::max_entry_norm() const {
  double m = 0.0;
  for (const Complex &c : e_)
    m = std::max(m, std::abs(c));
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int k = 0; k < dim_; ++k)
    t += at(k, k);
  return t;
}

double max_entry_diff(const ComplexMatrix &x, const ComplexMatrix &y) {
  return (x - y).max_entry_norm();
}

bool ComplexMatrix::is_hermitian() const {
  return max_entry_diff(*this, adjoint()) <= tol_;
}

bool ComplexMatrix::is_projection() const {
  return is_hermitian() && max_entry_diff(*this * *this, *this) <= tol_;
}

bool ComplexMatrix::is_unitary() const {
  const ComplexMatrix id = identity(dim_, tol_);
  return max_entry_diff(*this * adjoint(), id) <= tol_ &&
         max_entry_diff(adjoint() * *this, id) <= tol_;
}

int ComplexMatrix::rank() const {
  std::vector<Complex> a = e_;
  auto entry = [&](int i, int j) -> Complex & {
    return a[static_cast<std::size_t>(i) * dim_ + j];
  };
  int rank = 0;
  for (int col = 0; col < dim_ && rank < dim_; ++col) {
    int pivot = -1;
    double best = tol_;
    for (int row = rank; row < dim_; ++row)
      if (std::abs(entry(row, col)) > best) {
        best = std::abs(entry(row, col));
        pivot = row;
      }
    if (pivot < 0)
      continue;
    for (int j = 0; j < dim_; ++j)
      std::swap(entry(pivot, j), entry(rank, j));
    const Complex inv = 1.0 / entry(rank, col);
    for (int row = rank + 1; row < dim_; ++row) {
      const Complex factor = entry(row, col) * inv;
      for (int j = col; j < dim_; ++j)
        entry(row, j) -= factor * entry(rank, j);
    }
    ++rank;
  }
  return rank;
}

ComplexMatrix dye_numeric(int i, int j, Complex a, int dim, double tol) {
  if (i < 1 || i > dim || j < 1 || j > dim)
    throw IndexOutOfRange("dye indices must lie in 1..dim");
  if (i == j)
    throw IndexOutOfRange("dye requires i != j");
  const double denom = 1.0 + std::norm(a);
  if (!(denom > 0.0) || !std::isfinite(denom))
    throw SingularKernel("1 + |a|^2 is not invertible");
  const double k = 1.0 / denom;
  ComplexMatrix p(dim, tol);
  p.at(i - 1, i - 1) = k;
  p.at(i - 1, j - 1) = k * a;
  p.at(j - 1, i - 1) = k * std::conj(a);
  p.at(j - 1, j - 1) = k * std::norm(a);
  return p;
}

TwoByTwoDecomposition decompose2(const ComplexMatrix &p) {
  if (p.dim() != 2)
    throw DimensionMismatch("decompose2 expects a 2x2 matrix");
  if (!p.is_projection())
    throw NotAProjection("decompose2 input is not a projection");
  const double tol = p.tol();
  const ComplexMatrix zero(2, tol);
  if (max_entry_diff(p, zero) <= tol ||
      max_entry_diff(p, ComplexMatrix::identity(2, tol)) <= tol)
    throw TrivialProjection("decompose2 rejects 0 and the identity");

  const Complex b = p.at(0, 1);
  const double d11 = p.at(0, 0).real();

  TwoByTwoDecomposition out;
  if (std::abs(b) <= tol) {
    // Diagonal projection: one of the two matrix units.
    if (d11 > 0.5) {
      out.i = 1;
      out.j = 2;
    } else {
      out.i = 2;
      out.j = 1;
    }
    out.canonical = 0.0;
    return out;
  }

  const double disc = std::max(0.0, 1.0 - 4.0 * std::norm(b));
  const double s = std::sqrt(disc);
  // Put i on the dominant diagonal entry so the '+' branch (|a| <= 1)
  // reconstructs the input: the (i,i) entry of P_{i,j}(a) is (1+s)/2.
  const Complex numerator = (d11 >= 0.5) ? 2.0 * b : 2.0 * std::conj(b);
  if (d11 >= 0.5) {
    out.i = 1;
    out.j = 2;
  } else {
    out.i = 2;
    out.j = 1;
  }
  out.canonical = numerator / (1.0 + s);
  if (s > tol)
    out.alternate = numerator / (1.0 - s);
  return out;
}

ObstructionResult rank1_obstruction3(const ComplexMatrix &p) {
  if (p.dim() != 3)
    throw DimensionMismatch("rank1_obstruction3 expects a 3x3 matrix");
  if (!p.is_projection())
    throw NotAProjection("rank1_obstruction3 input is not a projection");
  const double tol = p.tol();

  ObstructionResult out;
  if (p.rank() != 1)
    return out;

  // Columns of a rank-one projection v v^* are multiples of v; take the one
  // with the largest diagonal entry (norm of the column is sqrt of that).
  int col = 0;
  double best = 0.0;
  for (int k = 0; k < 3; ++k)
    if (p.at(k, k).real() > best) {
      best = p.at(k, k).real();
      col = k;
    }
  Complex v[3] = {p.at(0, col), p.at(1, col), p.at(2, col)};

  std::vector<int> support;
  for (int k = 0; k < 3; ++k)
    if (std::abs(v[k]) > tol)
      support.push_back(k);

  if (support.empty() || support.size() > 2)
    return out;

  Rank1Witness w;
  if (support.size() == 1) {
    w.i = support[0] + 1;
    w.j = (w.i == 1) ? 2 : 1;
    w.a = 0.0;
  } else {
    // Range is spanned by e_i + a e_j; pick i at the larger coordinate so
    // the division is well conditioned.
    int i_idx = support[0];
    int j_idx = support[1];
    if (std::abs(v[j_idx]) > std::abs(v[i_idx]))
      std::swap(i_idx, j_idx);
    w.i = i_idx + 1;
    w.j = j_idx + 1;
    w.a = v[j_idx] / v[i_idx];
  }
  out.representable = true;
  out.witness = w;
  return out;
}

} // namespace cstar
