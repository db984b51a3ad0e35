#include "ylab/approx.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ylab/combinatorics.hpp"
#include "ylab/error.hpp"
#include "ylab/families.hpp"

namespace ylab {

namespace {

void require_positive(long n) {
  if (n < 1) throw Error(ErrorKind::domain, "the approximation needs n >= 1");
}

double signed_exp(double log_magnitude, int sign) {
  const double magnitude = std::exp(log_magnitude);  // +inf when not representable
  return sign < 0 ? -magnitude : magnitude;
}

}  // namespace

double stirling_factorial_approx(long n) {
  require_positive(n);
  const double x = static_cast<double>(n);
  return std::exp(x * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi * x));
}

double catalan_approx(long n) {
  require_positive(n);
  const double x = static_cast<double>(n);
  return std::exp(2.0 * x * std::numbers::ln2 - 1.5 * std::log(x) - 0.5 * std::log(std::numbers::pi));
}

double v_approx_log_abs(long n, const Rational& lambda) {
  require_positive(n);
  if (lambda == Rational(1)) throw Error(ErrorKind::pole, "pole at lambda = 1");
  if (lambda.is_zero()) return -std::numeric_limits<double>::infinity();
  const double x = static_cast<double>(n);
  return (3.0 * x + 1.0) * std::numbers::ln2 + 2.0 * x * lambda.log_abs() -
         (2.0 * x + 1.0) * (lambda - Rational(1)).log_abs() - 1.5 * std::log(x) -
         0.5 * std::log(std::numbers::pi);
}

double v_approx(long n, const Rational& lambda) {
  const double log_mag = v_approx_log_abs(n, lambda);
  if (lambda.is_zero()) return 0.0;
  // (-lambda^2)^n has sign (-1)^n; (lambda-1)^{2n+1} has the sign of lambda-1.
  int sign = (n % 2 == 0) ? 1 : -1;
  if ((lambda - Rational(1)).sign() < 0) sign = -sign;
  return signed_exp(log_mag, sign);
}

std::vector<ApproxRecord> v_approx_table(const std::vector<long>& ns, const Rational& lambda) {
  std::vector<ApproxRecord> out;
  out.reserve(ns.size());
  for (long n : ns) {
    ApproxRecord r;
    r.n = n;
    r.lambda = lambda;
    r.exact = v_number(n, lambda);
    r.approx = v_approx(n, lambda);
    if (r.exact.is_zero()) {
      r.rel_error = r.approx == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    } else {
      // |approx/exact - 1| from the log ratio, so huge magnitudes never overflow.
      const double log_ratio = v_approx_log_abs(n, lambda) - r.exact.log_abs();
      const bool same_sign = (r.approx < 0) == (r.exact.sign() < 0);
      r.rel_error = same_sign ? std::fabs(std::expm1(log_ratio)) : 1.0 + std::exp(log_ratio);
    }
    out.push_back(std::move(r));
  }
  return out;
}

double v_ratio_asymptotic(const Rational& lambda) {
  if (lambda == Rational(1)) throw Error(ErrorKind::pole, "pole at lambda = 1");
  const Rational q = lambda / (lambda - Rational(1));
  return (Rational(-8) * q * q).to_double();
}

Rational v_ratio_exact(long n, const Rational& lambda) {
  if (n < 0) throw Error(ErrorKind::domain, "n must be nonnegative");
  if (lambda == Rational(1)) throw Error(ErrorKind::pole, "pole at lambda = 1");
  const Rational q = lambda / (lambda - Rational(1));
  return -(Rational(8 * n + 4) / Rational(n + 2)) * q * q;
}

namespace {

void require_zeta_domain(const Rational& lambda, long m, long k) {
  if (!(lambda.abs() < Rational(1))) throw Error(ErrorKind::domain, "the series needs |lambda| < 1");
  if (k < 1) throw Error(ErrorKind::domain, "k must be positive");
  if (m < 0) throw Error(ErrorKind::domain, "m must be nonnegative");
}

}  // namespace

Rational zeta_partial_sum_exact(const Rational& lambda, long m, long k, long cutoff) {
  require_zeta_domain(lambda, m, k);
  if (cutoff < 1) throw Error(ErrorKind::domain, "cutoff must be at least 1");
  // weight_j = C(j+k-1, j) lambda^j, advanced by the ratio (j+k)/(j+1) lambda.
  Rational weight = 1;
  Rational sum = 0;
  for (long j = 0; j <= cutoff; ++j) {
    if (j > 0 || m == 0) sum += weight * Rational(j).pow(m);
    weight *= lambda * Rational(BigInt(j + k), BigInt(j + 1));
  }
  return sum;
}

double zeta_partial_sum(const Rational& lambda, long m, long k, long cutoff) {
  return zeta_partial_sum_exact(lambda, m, k, cutoff).to_double();
}

Rational zeta_target(const Rational& lambda, long m, long k, ZetaTarget form) {
  require_zeta_domain(lambda, m, k);
  if (form == ZetaTarget::printed) return -apostol_bernoulli(m + 1, k, lambda) / Rational(m + 1);
  Rational value = Rational(factorial(m)) * apostol_bernoulli(m + k, k, lambda) /
                   Rational(factorial(m + k));
  return neg_one_pow(k) < 0 ? -value : value;
}

double zeta_error(const Rational& lambda, long m, long k, long cutoff, ZetaTarget form) {
  return (zeta_partial_sum_exact(lambda, m, k, cutoff) - zeta_target(lambda, m, k, form)).abs().to_double();
}

}  // namespace ylab
