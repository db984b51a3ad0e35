#include "ylab/series.hpp"

#include <string>

#include "ylab/combinatorics.hpp"
#include "ylab/error.hpp"

namespace ylab {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::order_mismatch,
                "series orders differ: " + std::to_string(a.order()) + " vs " +
                    std::to_string(b.order()));
  }
}

TruncatedSeries shift_up(const TruncatedSeries& s) {
  TruncatedSeries out(s.order());
  for (size_t i = 1; i < s.order(); ++i) out[i] = s[i - 1];
  return out;
}

// lambda e^t + c as a series.
TruncatedSeries scaled_exp_plus(const Rational& lambda, const Rational& c, size_t order) {
  TruncatedSeries out(order);
  Rational inv_fact = 1;
  for (size_t i = 0; i < order; ++i) {
    if (i > 0) inv_fact /= Rational(static_cast<long>(i));
    out[i] = lambda * inv_fact;
  }
  if (order > 0) out[0] += c;
  return out;
}

}  // namespace

TruncatedSeries TruncatedSeries::constant(const Rational& value, size_t order) {
  TruncatedSeries s(order);
  if (order > 0) s[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::linear(const Rational& a, const Rational& b, size_t order) {
  TruncatedSeries s(order);
  if (order > 0) s[0] = a;
  if (order > 1) s[1] = b;
  return s;
}

TruncatedSeries ps_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries out = a;
  for (size_t i = 0; i < a.order(); ++i) out[i] += b[i];
  return out;
}

TruncatedSeries ps_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries out = a;
  for (size_t i = 0; i < a.order(); ++i) out[i] -= b[i];
  return out;
}

TruncatedSeries ps_scale(const TruncatedSeries& a, const Rational& c) {
  TruncatedSeries out = a;
  for (size_t i = 0; i < a.order(); ++i) out[i] *= c;
  return out;
}

TruncatedSeries ps_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const size_t n = a.order();
  TruncatedSeries out(n);
  for (size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries ps_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const size_t n = a.order();
  if (n == 0) return TruncatedSeries(0);
  if (b[0].is_zero()) throw Error(ErrorKind::non_invertible, "non-invertible series: zero constant term");
  const Rational inv = b[0].reciprocal();
  TruncatedSeries q(n);
  for (size_t i = 0; i < n; ++i) {
    Rational acc = a[i];
    for (size_t j = 1; j <= i; ++j) acc -= b[j] * q[i - j];
    q[i] = acc * inv;
  }
  return q;
}

TruncatedSeries ps_pow(const TruncatedSeries& a, unsigned long k) {
  TruncatedSeries result = TruncatedSeries::constant(1, a.order());
  TruncatedSeries base = a;
  while (k > 0) {
    if (k & 1UL) result = ps_mul(result, base);
    k >>= 1;
    if (k > 0) base = ps_mul(base, base);
  }
  return result;
}

TruncatedSeries ps_exp(const TruncatedSeries& a) {
  const size_t n = a.order();
  if (n == 0) return TruncatedSeries(0);
  if (!a[0].is_zero()) throw Error(ErrorKind::domain, "exp of a series with nonzero constant term");
  // b = exp(a) satisfies b' = a' b, so i b_i = sum_{j=1}^{i} j a_j b_{i-j}.
  TruncatedSeries b(n);
  b[0] = 1;
  for (size_t i = 1; i < n; ++i) {
    Rational acc = 0;
    for (size_t j = 1; j <= i; ++j) {
      if (a[j].is_zero()) continue;
      acc += Rational(static_cast<long>(j)) * a[j] * b[i - j];
    }
    b[i] = acc / Rational(static_cast<long>(i));
  }
  return b;
}

TruncatedSeries ps_log1p(const Rational& lambda, size_t order) {
  if (order == 0) throw Error(ErrorKind::domain, "log1p series needs order >= 1");
  TruncatedSeries s(order);
  Rational power = 1;
  for (size_t i = 1; i < order; ++i) {
    power *= lambda;
    const Rational term = power / Rational(static_cast<long>(i));
    s[i] = (i % 2 == 1) ? term : -term;
  }
  return s;
}

TruncatedSeries ps_binom_x(const Rational& x, const Rational& lambda, size_t order) {
  if (order == 0) throw Error(ErrorKind::domain, "binomial series needs order >= 1");
  TruncatedSeries s(order);
  // Coefficient i is (x)_i lambda^i / i!, i.e. a running product of (x-i+1) lambda / i.
  Rational c = 1;
  s[0] = c;
  for (size_t i = 1; i < order; ++i) {
    const Rational step = (x - Rational(static_cast<long>(i - 1))) * lambda /
                          Rational(static_cast<long>(i));
    c *= step;
    s[i] = c;
  }
  return s;
}

std::vector<Rational> to_egf_values(const TruncatedSeries& s) {
  std::vector<Rational> out(s.order());
  Rational fact = 1;
  for (size_t i = 0; i < s.order(); ++i) {
    if (i > 0) fact *= Rational(static_cast<long>(i));
    out[i] = s[i] * fact;
  }
  return out;
}

namespace {

TruncatedSeries y_generating_function(unsigned long k, const Rational& lambda, size_t order) {
  if (lambda == Rational(1)) throw Error(ErrorKind::pole, "pole at lambda = 1");
  // 2 / (lambda(1 + lambda t) - 1) = 2 / ((lambda - 1) + lambda^2 t)
  const auto numerator = TruncatedSeries::constant(2, order);
  const auto denominator = TruncatedSeries::linear(lambda - Rational(1), lambda * lambda, order);
  return ps_pow(ps_div(numerator, denominator), k);
}

}  // namespace

std::vector<Rational> expand_y_gf(unsigned long k, const Rational& lambda, size_t order) {
  return to_egf_values(y_generating_function(k, lambda, order));
}

std::vector<Rational> expand_y_poly_gf(unsigned long k, const Rational& x,
                                       const Rational& lambda, size_t order) {
  const auto f = y_generating_function(k, lambda, order);
  if (order == 0) return {};
  return to_egf_values(ps_mul(f, ps_binom_x(x, lambda, order)));
}

std::vector<Rational> expand_stirling1_gf(unsigned long k, size_t order) {
  if (order == 0) return {};
  const auto log_series = ps_log1p(1, order);
  auto powered = ps_pow(log_series, k);
  const Rational inv_k_fact(BigInt(1), factorial(static_cast<long>(k)));
  return to_egf_values(ps_scale(powered, inv_k_fact));
}

std::vector<Rational> expand_apostol_gf(ApostolKind kind, unsigned long k,
                                        const Rational& lambda, size_t order) {
  TruncatedSeries base(order);
  if (kind == ApostolKind::bernoulli) {
    if (lambda == Rational(1)) throw Error(ErrorKind::pole, "Apostol-Bernoulli series pole at lambda = 1");
    // t / (lambda e^t - 1): invert the denominator, then shift by one power of t.
    const auto denominator = scaled_exp_plus(lambda, -1, order);
    base = shift_up(ps_div(TruncatedSeries::constant(1, order), denominator));
  } else {
    if (lambda == Rational(-1)) throw Error(ErrorKind::pole, "Apostol-Euler series pole at lambda = -1");
    const auto denominator = scaled_exp_plus(lambda, 1, order);
    base = ps_div(TruncatedSeries::constant(2, order), denominator);
  }
  return to_egf_values(ps_pow(base, k));
}

}  // namespace ylab
