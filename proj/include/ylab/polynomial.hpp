#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ylab/rational.hpp"

namespace ylab {

/// Dense univariate polynomial over Q. coeffs()[i] multiplies l^i; the
/// highest stored coefficient is nonzero, and the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static Polynomial monomial(const Rational& coeff, long degree);
  /// (l - root)^power, expanded.
  static Polynomial linear_power(const Rational& root, long power);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  Rational coeff(long i) const;

  Rational operator()(const Rational& at) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  /// Scale to integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;

  /// Quotient and remainder; Error(domain) for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& b) { return a *= b; }
  friend Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Descending-degree rendering in the variable `var`, e.g.
  /// "l^3 - 3*l^2 + 3*l - 1".
  std::string to_string(const std::string& var = "l") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd over Q (zero when both inputs are zero). Runs Euclid on
/// content-stripped integer polynomials using pseudo-remainders.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Quotient of polynomials in canonical form: numerator and denominator
/// coprime, denominator monic. Two equal functions have equal fields.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  /// Error(domain) when den is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Error(pole) when the denominator vanishes at `at`.
  Rational operator()(const Rational& at) const;
  RationalFunction derivative() const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// "num / (den)" with both sides expanded, or just "num" when den = 1.
  std::string to_string(const std::string& var = "l") const;
  /// Same, but a denominator equal to (l-1)^p is shown as "(l-1)^p".
  std::string to_factored_string(const std::string& var = "l") const;
  /// p when den == (l - root)^p, detected by repeated exact division; -1 otherwise.
  long pure_linear_power(const Rational& root) const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace ylab
