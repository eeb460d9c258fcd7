#pragma once

#include <array>
#include <complex>
#include <string>

#include "cstar/rational.hpp"

namespace cstar {

// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
  Rational re_, im_;

public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(re) {} // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(re), im_(im) {}

  const Rational &re() const noexcept { return re_; }
  const Rational &im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }

  friend GaussianRational operator+(const GaussianRational &x,
                                    const GaussianRational &y) {
    return {x.re_ + y.re_, x.im_ + y.im_};
  }
  friend GaussianRational operator-(const GaussianRational &x,
                                    const GaussianRational &y) {
    return {x.re_ - y.re_, x.im_ - y.im_};
  }
  friend GaussianRational operator*(const GaussianRational &x,
                                    const GaussianRational &y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational inv() const {
    if (is_zero())
      throw DivisionByZero("inverse of zero Gaussian rational");
    Rational norm = re_ * re_ + im_ * im_;
    return {re_ / norm, -im_ / norm};
  }

  friend bool operator==(const GaussianRational &,
                         const GaussianRational &) = default;
};

// Element of the field Q(i, sqrt 2), stored as a + b*sqrt2 with Gaussian
// rational components a, b. The representation is unique, so equality is
// componentwise. Closed under +, -, *, conj and inversion of nonzero values:
// sqrt2 is irrational over Q(i), hence a^2 - 2b^2 = 0 forces a = b = 0.
class ExactScalar {
  GaussianRational a_, b_; // value = a_ + b_ * sqrt(2)

public:
  ExactScalar() = default;
  ExactScalar(std::int64_t v) : a_(Rational(v)) {} // NOLINT(google-explicit-constructor)
  ExactScalar(Rational v) : a_(v) {}               // NOLINT(google-explicit-constructor)
  ExactScalar(GaussianRational a) : a_(a) {}       // NOLINT(google-explicit-constructor)
  ExactScalar(GaussianRational a, GaussianRational b) : a_(a), b_(b) {}

  static ExactScalar i() { return {{Rational(0), Rational(1)}, {}}; }
  static ExactScalar sqrt2() { return {{}, {Rational(1), Rational(0)}}; }
  static ExactScalar rational(std::int64_t p, std::int64_t q) {
    return ExactScalar(Rational(p, q));
  }
  static ExactScalar half() { return rational(1, 2); }
  // 1/sqrt2 = sqrt2/2
  static ExactScalar inv_sqrt2() { return {{}, {Rational(1, 2), Rational(0)}}; }

  const GaussianRational &rational_part() const noexcept { return a_; }
  const GaussianRational &sqrt2_part() const noexcept { return b_; }

  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const noexcept {
    return b_.is_zero() && a_.im().is_zero() && a_.re().is_one();
  }
  bool is_real() const noexcept { return a_.is_real() && b_.is_real(); }

  ExactScalar conj() const { return {a_.conj(), b_.conj()}; }

  friend ExactScalar operator+(const ExactScalar &x, const ExactScalar &y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend ExactScalar operator-(const ExactScalar &x, const ExactScalar &y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend ExactScalar operator*(const ExactScalar &x, const ExactScalar &y) {
    // (a1 + b1 r)(a2 + b2 r) = a1 a2 + 2 b1 b2 + (a1 b2 + b1 a2) r, r = sqrt2
    GaussianRational two{Rational(2), Rational(0)};
    return {x.a_ * y.a_ + two * (x.b_ * y.b_), x.a_ * y.b_ + x.b_ * y.a_};
  }
  ExactScalar operator-() const { return {-a_, -b_}; }

  ExactScalar inv() const {
    if (is_zero())
      throw DivisionByZero("inverse of zero scalar");
    // 1/(a + b r) = (a - b r) / (a^2 - 2 b^2)
    GaussianRational two{Rational(2), Rational(0)};
    GaussianRational norm = a_ * a_ - two * (b_ * b_);
    GaussianRational n_inv = norm.inv();
    return {a_ * n_inv, (-b_) * n_inv};
  }

  friend ExactScalar operator/(const ExactScalar &x, const ExactScalar &y) {
    return x * y.inv();
  }

  friend bool operator==(const ExactScalar &, const ExactScalar &) = default;

  std::complex<double> to_complex() const {
    const double s = 1.4142135623730950488;
    return {a_.re().to_double() + s * b_.re().to_double(),
            a_.im().to_double() + s * b_.im().to_double()};
  }

  // Components in the basis order (re, i, r2, i*r2).
  std::array<Rational, 4> components() const {
    return {a_.re(), a_.im(), b_.re(), b_.im()};
  }

  int component_count() const {
    int c = 0;
    for (const auto &r : components())
      if (!r.is_zero())
        ++c;
    return c;
  }

  // Expression-language form, e.g. "1/2 - 1/2*i + r2". Parseable back by the
  // expression parser (multi-component values must be parenthesized by the
  // caller when used as a coefficient).
  std::string str() const {
    static const char *suffix[4] = {"", "*i", "*r2", "*i*r2"};
    auto comps = components();
    std::string out;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
      const Rational &r = comps[static_cast<std::size_t>(k)];
      if (r.is_zero())
        continue;
      Rational mag = r.abs();
      std::string piece;
      if (mag.is_one() && k != 0)
        piece = std::string(suffix[k] + 1); // drop the leading '*'
      else
        piece = mag.str() + suffix[k];
      if (first) {
        out = (r.is_negative() ? "-" : "") + piece;
        first = false;
      } else {
        out += (r.is_negative() ? " - " : " + ") + piece;
      }
    }
    return first ? "0" : out;
  }
};

inline ExactScalar operator*(std::int64_t k, const ExactScalar &x) {
  return ExactScalar(k) * x;
}

} // namespace cstar
