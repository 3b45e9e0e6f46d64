#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "streamconv/error.hpp"

namespace streamconv {

// Exact rational on int64, always normalized (den > 0, gcd(num, den) == 1).
// Used for rate ratios and sample-time bookkeeping, where floats would drift.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) fail(ErrCode::InvalidArgument, "rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  // Floor/ceil toward -inf/+inf (num may be negative).
  std::int64_t floor() const {
    const std::int64_t q = num / den;
    return (num % den != 0 && num < 0) ? q - 1 : q;
  }
  std::int64_t ceil() const {
    const std::int64_t q = num / den;
    return (num % den != 0 && num > 0) ? q + 1 : q;
  }

  Rational inverse() const {
    if (num == 0) fail(ErrCode::InvalidArgument, "inverse of zero rational");
    return Rational(den, num);
  }

  std::string str() const {
    return is_integer() ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
  friend Rational operator/(Rational a, Rational b) { return a * b.inverse(); }
  friend Rational operator-(Rational a) { return Rational(-a.num, a.den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

}  // namespace streamconv
