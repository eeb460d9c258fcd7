#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "cstar/errors.hpp"

namespace cstar {

using Complex = std::complex<double>;

// Machine-precision square complex matrix. Predicates (projection,
// hermitian, unitary) are evaluated up to the tolerance in max-entry norm.
class ComplexMatrix {
  int dim_;
  std::vector<Complex> e_;
  double tol_ = 1e-12;

public:
  explicit ComplexMatrix(int dim, double tol = 1e-12);

  static ComplexMatrix identity(int dim, double tol = 1e-12);

  int dim() const noexcept { return dim_; }
  double tol() const noexcept { return tol_; }
  void set_tol(double tol) { tol_ = tol; }

  Complex &at(int i, int j) {
    return e_[static_cast<std::size_t>(i) * dim_ + j];
  }
  const Complex &at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * dim_ + j];
  }

  friend ComplexMatrix operator+(const ComplexMatrix &x,
                                 const ComplexMatrix &y);
  friend ComplexMatrix operator-(const ComplexMatrix &x,
                                 const ComplexMatrix &y);
  friend ComplexMatrix operator*(const ComplexMatrix &x,
                                 const ComplexMatrix &y);
  ComplexMatrix adjoint() const;

  double max_entry_norm() const;
  Complex trace() const;

  bool is_hermitian() const;
  bool is_projection() const;
  bool is_unitary() const;

  // Rank via Gaussian elimination with partial pivoting; entries below the
  // tolerance count as zero.
  int rank() const;
};

double max_entry_diff(const ComplexMatrix &x, const ComplexMatrix &y);

// Numeric P_{i,j}(a) in M_dim(C), 1-based indices.
ComplexMatrix dye_numeric(int i, int j, Complex a, int dim,
                          double tol = 1e-12);

// Closed-form parameters of a 2x2 projection. `canonical` always satisfies
// |a| <= 1 and reconstructs the input via dye_numeric(i, j, a, 2). The
// alternate branch value is reported when the two branches differ.
struct TwoByTwoDecomposition {
  int i = 1;
  int j = 2;
  Complex canonical{0.0, 0.0};
  std::optional<Complex> alternate;
};

TwoByTwoDecomposition decompose2(const ComplexMatrix &p);

struct Rank1Witness {
  int i = 0;
  int j = 0;
  Complex a{0.0, 0.0};
};

// Whether a 3x3 projection lies in the Dye family, i.e. is rank one with a
// range vector supported on at most two coordinates. On success the witness
// (i, j, a) reconstructs the input.
struct ObstructionResult {
  bool representable = false;
  std::optional<Rank1Witness> witness;
};

ObstructionResult rank1_obstruction3(const ComplexMatrix &p);

} // namespace cstar
