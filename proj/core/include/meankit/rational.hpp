#ifndef MEANKIT_RATIONAL_HPP
#define MEANKIT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "meankit/errors.hpp"

namespace meankit {

/// Exact rational number on 64-bit integers, always in lowest terms with a
/// positive denominator. Overflow throws ArithmeticOverflow instead of
/// wrapping.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}

  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0)
      throw ArithmeticOverflow("rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator-(const Rational& x) {
    return Rational(checked_neg(x.num_), x.den_);
  }
  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(
        checked_add(checked_mul(x.num_, y.den_), checked_mul(y.num_, x.den_)),
        checked_mul(x.den_, y.den_));
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return x + (-y);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(checked_mul(x.num_, y.num_), checked_mul(x.den_, y.den_));
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0)
      throw ArithmeticOverflow("rational division by zero");
    return Rational(checked_mul(x.num_, y.den_), checked_mul(x.den_, y.num_));
  }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) {
    return !(x == y);
  }
  friend bool operator<(const Rational& x, const Rational& y) {
    // 128-bit cross products cannot overflow for 64-bit operands
    return static_cast<__int128>(x.num_) * y.den_ <
           static_cast<__int128>(y.num_) * x.den_;
  }
  friend bool operator<=(const Rational& x, const Rational& y) {
    return !(y < x);
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator>=(const Rational& x, const Rational& y) {
    return !(x < y);
  }

  std::string str() const {
    if (den_ == 1)
      return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
      throw ArithmeticOverflow("rational addition overflow");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
      throw ArithmeticOverflow("rational multiplication overflow");
    return r;
  }
  static std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN)
      throw ArithmeticOverflow("rational negation overflow");
    return -a;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0)
      den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace meankit

#endif
