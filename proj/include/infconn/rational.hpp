#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "infconn/error.hpp"

namespace infconn {

/// Exact fraction over 64-bit integers, always stored in lowest terms with a
/// positive denominator. Intermediate products are formed in 128 bits and an
/// Overflow error is raised if a reduced result does not fit back.
class Rational {
 public:
  using int_type = std::int64_t;

  constexpr Rational() noexcept = default;
  constexpr Rational(int_type value) noexcept : num_(value) {}  // NOLINT(implicit)
  Rational(int_type num, int_type den) { *this = make(num, den); }

  int_type num() const noexcept { return num_; }
  int_type den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  bool is_zero() const noexcept { return num_ == 0; }

  friend bool operator==(const Rational&, const Rational&) = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return reduce(static_cast<__int128>(a.num_) + b.num_, a.den_);
    return reduce(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                  static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return reduce(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorCode::NonPositiveInput, "division by zero rational");
    return reduce(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const {
    if (num_ == std::numeric_limits<int_type>::min()) throw Error(ErrorCode::Overflow, "negation");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational abs(const Rational& r) { return r.num_ < 0 ? -r : r; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational make(int_type num, int_type den) {
    if (den == 0) throw Error(ErrorCode::NonPositiveInput, "zero denominator");
    return reduce(num, den);
  }

  static __int128 gcd128(__int128 a, __int128 b) noexcept {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational reduce(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
    constexpr auto lo = std::numeric_limits<int_type>::min();
    constexpr auto hi = std::numeric_limits<int_type>::max();
    if (num < lo || num > hi || den > hi) throw Error(ErrorCode::Overflow, "rational out of 64-bit range");
    Rational r;
    r.num_ = static_cast<int_type>(num);
    r.den_ = static_cast<int_type>(den);
    return r;
  }

  int_type num_ = 0;
  int_type den_ = 1;
};

}  // namespace infconn
