#pragma once

#include <optional>
#include <vector>

#include "ylab/polynomial.hpp"
#include "ylab/rational.hpp"

namespace ylab {

// Y_n^(k)(lambda), the coefficients of (2 / (lambda(1 + lambda t) - 1))^k
// in the basis t^n/n!. Every member has a pole at lambda = 1; those calls
// throw Error(pole).

/// Closed form (-1)^n C(k+n-1, n) 2^k n! lambda^{2n} / (lambda - 1)^{k+n}.
Rational y_number(long n, long k, const Rational& lambda);

/// First-order recurrence Y_n = lambda^2/(1-lambda) (n+k-1) Y_{n-1} from the
/// seed 2^k/(lambda-1)^k. Falls back to the closed form when k = 0.
Rational y_number_recurrence(long n, long k, const Rational& lambda);

/// Y_n^(k) as a reduced rational function of lambda.
RationalFunction y_number_ratfun(long n, long k);

/// Y_n^(k)(x; lambda) = sum_j C(n,j) lambda^{n-j} (x)_{n-j} Y_j^(k)(lambda).
Rational y_polynomial(long n, long k, const Rational& x, const Rational& lambda);

/// Signed Stirling numbers of the first kind; 0 outside 0 <= m <= n.
BigInt stirling1(long n, long m);

/// B_n^(k)(lambda). lambda = 1 uses the classical Bernoulli recurrence (B_1 = -1/2).
Rational apostol_bernoulli(long n, long k, const Rational& lambda);

/// E_n^(k)(lambda); Error(pole) at lambda = -1.
Rational apostol_euler(long n, long k, const Rational& lambda);

/// C(2n, n) / (n + 1).
BigInt catalan(long n);

/// C(k, j) lambda^j (1 - lambda)^{k-j}; 0 when j is outside [0, k].
Rational bernstein(long j, long k, const Rational& lambda);

/// V_n(lambda) = Y_n^(n+1)(lambda) / (n+1)!.
Rational v_number(long n, const Rational& lambda);
/// Same value through the Catalan form (-1)^n C_n 2^{n+1} lambda^{2n} / (lambda-1)^{2n+1}.
Rational v_number_catalan(long n, const Rational& lambda);

enum class FamilyKind { stirling1, apostol_bernoulli, apostol_euler };

/// Immutable (max_n + 1) x (max_k + 1) table of exact values, built in one pass.
/// values[n][k] holds S_1(n, k), B_n^(k)(lambda) or E_n^(k)(lambda).
class FamilyTable {
 public:
  static FamilyTable stirling1(long max_n);
  static FamilyTable apostol_bernoulli(const Rational& lambda, long max_n, long max_k);
  /// Error(pole) at lambda = -1.
  static FamilyTable apostol_euler(const Rational& lambda, long max_n, long max_k);

  FamilyKind kind() const { return kind_; }
  const std::optional<Rational>& parameter() const { return parameter_; }
  long max_n() const { return max_n_; }
  long max_k() const { return max_k_; }
  /// Error(domain) outside the built range.
  const Rational& at(long n, long k) const;

 private:
  FamilyTable(FamilyKind kind, std::optional<Rational> parameter, long max_n, long max_k);
  void fill_higher_orders();

  FamilyKind kind_;
  std::optional<Rational> parameter_;
  long max_n_;
  long max_k_;
  std::vector<std::vector<Rational>> values_;
};

}  // namespace ylab
