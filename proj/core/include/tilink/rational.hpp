#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "tilink/errors.hpp"

namespace tilink {

// Exact rational arithmetic on 64-bit integers with overflow checking.
// Used for the combinatorial bookkeeping where floating point would be
// wrong in kind, not just in precision: geometry classification, Euler
// characteristics per crossing, minimal genus, class weights.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw DomainError("rational: zero denominator");
    reduce();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "p" when integral, "p/q" otherwise.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    using W = __int128;
    return make(W(x.num_) * y.den_ + W(y.num_) * x.den_, W(x.den_) * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    using W = __int128;
    return make(W(x.num_) * y.den_ - W(y.num_) * x.den_, W(x.den_) * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    using W = __int128;
    return make(W(x.num_) * y.num_, W(x.den_) * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw DomainError("rational: division by zero");
    using W = __int128;
    return make(W(x.num_) * y.den_, W(x.den_) * y.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) {
    return !(x == y);
  }
  friend bool operator<(const Rational& x, const Rational& y) {
    return __int128(x.num_) * y.den_ < __int128(y.num_) * x.den_;
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) {
    return !(y < x);
  }
  friend bool operator>=(const Rational& x, const Rational& y) {
    return !(x < y);
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

 private:
  // std::gcd rejects __int128 under strict -std=c++20, so roll our own.
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
      throw NumericalError("rational: 64-bit overflow");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  void reduce() {
    Rational r = make(num_, den_);
    num_ = r.num_;
    den_ = r.den_;
  }

  long long num_ = 0;
  long long den_ = 1;
};

// Accepts "3", "-3", "1/3", and plain decimals such as "0.25".
// Anything else (exponents, stray characters) is a ParseError.
Rational parse_rational(const std::string& text);

// Least common multiple with overflow checking.
long long checked_lcm(long long a, long long b);

}  // namespace tilink
