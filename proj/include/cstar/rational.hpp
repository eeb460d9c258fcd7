#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cstar/errors.hpp"

namespace cstar {

namespace detail {

inline __int128 abs128(__int128 x) { return x < 0 ? -x : x; }

inline __int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t narrow128(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

} // namespace detail

// Exact fraction with int64 numerator/denominator, always stored in lowest
// terms with positive denominator. Intermediate products go through 128-bit
// arithmetic; results that do not fit 64 bits throw std::overflow_error.
class Rational {
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;

  Rational(__int128 n, __int128 d, int) { // pre-reduction entry point
    if (d == 0)
      throw DivisionByZero("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = detail::narrow128(n);
    den_ = detail::narrow128(d);
  }

public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d)
      : Rational(static_cast<__int128>(n), static_cast<__int128>(d), 0) {}

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
  bool is_negative() const noexcept { return num_ < 0; }

  friend Rational operator+(const Rational &x, const Rational &y) {
    __int128 n = static_cast<__int128>(x.num_) * y.den_ +
                 static_cast<__int128>(y.num_) * x.den_;
    __int128 d = static_cast<__int128>(x.den_) * y.den_;
    return Rational(n, d, 0);
  }

  friend Rational operator-(const Rational &x, const Rational &y) {
    __int128 n = static_cast<__int128>(x.num_) * y.den_ -
                 static_cast<__int128>(y.num_) * x.den_;
    __int128 d = static_cast<__int128>(x.den_) * y.den_;
    return Rational(n, d, 0);
  }

  friend Rational operator*(const Rational &x, const Rational &y) {
    __int128 n = static_cast<__int128>(x.num_) * y.num_;
    __int128 d = static_cast<__int128>(x.den_) * y.den_;
    return Rational(n, d, 0);
  }

  friend Rational operator/(const Rational &x, const Rational &y) {
    if (y.num_ == 0)
      throw DivisionByZero("rational division by zero");
    __int128 n = static_cast<__int128>(x.num_) * y.den_;
    __int128 d = static_cast<__int128>(x.den_) * y.num_;
    return Rational(n, d, 0);
  }

  Rational operator-() const {
    Rational r;
    r.num_ = detail::narrow128(-static_cast<__int128>(num_));
    r.den_ = den_;
    return r;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  friend bool operator==(const Rational &x, const Rational &y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  friend auto operator<=>(const Rational &x, const Rational &y) {
    __int128 l = static_cast<__int128>(x.num_) * y.den_;
    __int128 r = static_cast<__int128>(y.num_) * x.den_;
    return l <=> r;
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "p" for integers, "p/q" otherwise.
  std::string str() const {
    if (den_ == 1)
      return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p" or "p/q", optional leading '-'.
  static Rational parse(std::string_view s) {
    auto fail = [&] {
      throw SyntaxError("malformed rational literal '" + std::string(s) + "'");
    };
    if (s.empty())
      fail();
    std::size_t slash = s.find('/');
    auto to_int = [&](std::string_view part) -> std::int64_t {
      if (part.empty())
        fail();
      std::size_t pos = 0;
      bool neg = part[0] == '-';
      if (neg)
        pos = 1;
      if (pos >= part.size())
        fail();
      std::int64_t v = 0;
      for (; pos < part.size(); ++pos) {
        if (part[pos] < '0' || part[pos] > '9')
          fail();
        v = detail::narrow128(static_cast<__int128>(v) * 10 +
                              (part[pos] - '0'));
      }
      return neg ? -v : v;
    };
    if (slash == std::string_view::npos)
      return Rational(to_int(s));
    return Rational(to_int(s.substr(0, slash)), to_int(s.substr(slash + 1)));
  }
};

} // namespace cstar
