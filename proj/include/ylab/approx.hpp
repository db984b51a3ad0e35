#pragma once

#include <vector>

#include "ylab/rational.hpp"

namespace ylab {

// Floating-point leading-order approximations. Magnitudes are accumulated in
// log space; a value that does not fit in a double comes back as +-inf.

/// (n/e)^n sqrt(2 pi n); Error(domain) for n < 1.
double stirling_factorial_approx(long n);

/// 4^n / (n sqrt(n pi)); Error(domain) for n < 1.
double catalan_approx(long n);

/// 2^{3n+1} (-lambda^2)^n / ((lambda-1)^{2n+1} n^{3/2} sqrt(pi)).
/// Error(domain) for n < 1, Error(pole) at lambda = 1.
double v_approx(long n, const Rational& lambda);

/// Natural log of |v_approx(n, lambda)|, finite even when the value is not.
double v_approx_log_abs(long n, const Rational& lambda);

struct ApproxRecord {
  long n = 0;
  Rational lambda;
  Rational exact;
  double approx = 0.0;
  double rel_error = 0.0;
};

/// Exact V_n(lambda) paired with v_approx for each n.
std::vector<ApproxRecord> v_approx_table(const std::vector<long>& ns, const Rational& lambda);

/// -8 (lambda/(lambda-1))^2; Error(pole) at lambda = 1.
double v_ratio_asymptotic(const Rational& lambda);

/// -((8n+4)/(n+2)) (lambda/(lambda-1))^2, the exact V_{n+1}/V_n.
Rational v_ratio_exact(long n, const Rational& lambda);

/// sum_{j=0}^{N} C(j+k-1, j) lambda^j j^m (0^0 = 1), summed exactly and
/// rounded once. Error(domain) unless |lambda| < 1, k >= 1, N >= 1, m >= 0.
double zeta_partial_sum(const Rational& lambda, long m, long k, long cutoff);
/// The same truncated sum as an exact rational.
Rational zeta_partial_sum_exact(const Rational& lambda, long m, long k, long cutoff);

enum class ZetaTarget {
  printed,  // -B_{m+1}^(k)(lambda) / (m+1)
  order_k,  // (-1)^k m! B_{m+k}^(k)(lambda) / (m+k)!
};
/// Claimed limit of the partial sums; the two forms agree when k = 1.
Rational zeta_target(const Rational& lambda, long m, long k, ZetaTarget form = ZetaTarget::printed);
/// |S_N - target| evaluated exactly, then rounded.
double zeta_error(const Rational& lambda, long m, long k, long cutoff,
                  ZetaTarget form = ZetaTarget::printed);

}  // namespace ylab
