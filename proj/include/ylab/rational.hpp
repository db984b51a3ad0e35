#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ylab {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator (zero is 0/1).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  /// Throws Error(domain) when den is zero.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p", "p/q" with an optional leading '-', '+' or U+2212.
  static Rational parse(std::string_view text);
  /// Like parse(), additionally accepting finite decimals such as "-0.25".
  static Rational parse_decimal(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Integer power; negative exponents invert (Error(domain) on 0^-n).
  Rational pow(long exponent) const;
  Rational abs() const;
  Rational reciprocal() const;

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  /// Nearest-ish double computed from separately extracted mantissas and
  /// binary exponents, so huge numerators and denominators do not overflow.
  double to_double() const;
  /// Natural log of |value|; -inf for zero.
  double log_abs() const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// (-1)^n as +1 / -1.
inline int neg_one_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace ylab
