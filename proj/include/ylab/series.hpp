#pragma once

#include <cstddef>
#include <vector>

#include "ylab/rational.hpp"

namespace ylab {

/// Formal power series in t over Q, truncated after `order` coefficients.
/// coeffs()[i] multiplies t^i and coeffs().size() == order() always.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(size_t order) : coeffs_(order) {}
  explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  /// `value` as a constant series.
  static TruncatedSeries constant(const Rational& value, size_t order);
  /// a + b t, truncated.
  static TruncatedSeries linear(const Rational& a, const Rational& b, size_t order);

  size_t order() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](size_t i) const { return coeffs_[i]; }
  Rational& operator[](size_t i) { return coeffs_[i]; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// All binary operations reject operands of different order with
// Error(order_mismatch).
TruncatedSeries ps_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_scale(const TruncatedSeries& a, const Rational& c);
/// Cauchy product truncated to the common order.
TruncatedSeries ps_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// q with q*b == a; Error(non_invertible) when b has a zero constant term.
TruncatedSeries ps_div(const TruncatedSeries& a, const TruncatedSeries& b);
/// a^k by binary exponentiation; a^0 is the constant series 1.
TruncatedSeries ps_pow(const TruncatedSeries& a, unsigned long k);
/// exp(a); Error(domain) unless a has a zero constant term.
TruncatedSeries ps_exp(const TruncatedSeries& a);
/// log(1 + lambda t) = sum_{i>=1} (-1)^{i+1} lambda^i t^i / i.
TruncatedSeries ps_log1p(const Rational& lambda, size_t order);
/// (1 + lambda t)^x = sum_i (x)_i lambda^i t^i / i!.
TruncatedSeries ps_binom_x(const Rational& x, const Rational& lambda, size_t order);

// Generating-function expansions. Each returns the exponential-generating
// coefficients n! * [t^n] for n < order, i.e. the numbers themselves.

/// Y_n^(k)(lambda) from (2 / (lambda(1 + lambda t) - 1))^k. Error(pole) at lambda = 1.
std::vector<Rational> expand_y_gf(unsigned long k, const Rational& lambda, size_t order);
/// Y_n^(k)(x; lambda) from the above times (1 + lambda t)^x.
std::vector<Rational> expand_y_poly_gf(unsigned long k, const Rational& x,
                                       const Rational& lambda, size_t order);
/// S_1(n, k) for n < order from [log(1+t)]^k / k!.
std::vector<Rational> expand_stirling1_gf(unsigned long k, size_t order);

enum class ApostolKind { bernoulli, euler };

/// Bernoulli: (t / (lambda e^t - 1))^k, Error(pole) at lambda = 1.
/// Euler: (2 / (lambda e^t + 1))^k, Error(pole) at lambda = -1.
std::vector<Rational> expand_apostol_gf(ApostolKind kind, unsigned long k,
                                        const Rational& lambda, size_t order);

/// Multiplies coefficient i by i!.
std::vector<Rational> to_egf_values(const TruncatedSeries& s);

}  // namespace ylab
