#include "ylab/families.hpp"

#include <algorithm>
#include <string>

#include "ylab/combinatorics.hpp"
#include "ylab/error.hpp"

namespace ylab {

namespace {

void require_nonneg(long v, const char* name) {
  if (v < 0) throw Error(ErrorKind::domain, std::string(name) + " must be nonnegative");
}

void require_not_one(const Rational& lambda) {
  if (lambda == Rational(1)) throw Error(ErrorKind::pole, "pole at lambda = 1");
}

Rational two_pow(long k) { return Rational(2).pow(k); }

}  // namespace

Rational y_number(long n, long k, const Rational& lambda) {
  require_nonneg(n, "n");
  require_nonneg(k, "k");
  require_not_one(lambda);
  Rational value(binomial(k + n - 1, n) * factorial(n));
  value *= two_pow(k) * lambda.pow(2 * n) / (lambda - Rational(1)).pow(k + n);
  return neg_one_pow(n) < 0 ? -value : value;
}

Rational y_number_recurrence(long n, long k, const Rational& lambda) {
  require_nonneg(n, "n");
  require_nonneg(k, "k");
  require_not_one(lambda);
  if (k == 0) return y_number(n, k, lambda);
  const Rational ratio = lambda * lambda / (Rational(1) - lambda);
  Rational value = two_pow(k) / (lambda - Rational(1)).pow(k);
  for (long i = 1; i <= n; ++i) value *= ratio * Rational(i + k - 1);
  return value;
}

RationalFunction y_number_ratfun(long n, long k) {
  require_nonneg(n, "n");
  require_nonneg(k, "k");
  Rational coeff(binomial(k + n - 1, n) * factorial(n));
  coeff *= two_pow(k);
  if (neg_one_pow(n) < 0) coeff = -coeff;
  return RationalFunction(Polynomial::monomial(coeff, 2 * n),
                          Polynomial::linear_power(Rational(1), k + n));
}

Rational y_polynomial(long n, long k, const Rational& x, const Rational& lambda) {
  require_nonneg(n, "n");
  require_nonneg(k, "k");
  require_not_one(lambda);
  Rational sum = 0;
  for (long j = 0; j <= n; ++j) {
    const Rational falling = falling_factorial(x, n - j);
    if (falling.is_zero()) continue;
    sum += Rational(binomial(n, j)) * lambda.pow(n - j) * falling * y_number(j, k, lambda);
  }
  return sum;
}

BigInt stirling1(long n, long m) {
  if (n < 0 || m < 0 || m > n) return 0;
  return FamilyTable::stirling1(n).at(n, m).numerator();
}

Rational apostol_bernoulli(long n, long k, const Rational& lambda) {
  require_nonneg(n, "n");
  require_nonneg(k, "k");
  return FamilyTable::apostol_bernoulli(lambda, n, k).at(n, k);
}

Rational apostol_euler(long n, long k, const Rational& lambda) {
  require_nonneg(n, "n");
  require_nonneg(k, "k");
  return FamilyTable::apostol_euler(lambda, n, k).at(n, k);
}

BigInt catalan(long n) {
  require_nonneg(n, "n");
  BigInt c = binomial(2 * n, n);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return c;
}

Rational bernstein(long j, long k, const Rational& lambda) {
  if (j < 0 || j > k) return 0;
  return Rational(binomial(k, j)) * lambda.pow(j) * (Rational(1) - lambda).pow(k - j);
}

Rational v_number(long n, const Rational& lambda) {
  require_nonneg(n, "n");
  return y_number(n, n + 1, lambda) / Rational(factorial(n + 1));
}

Rational v_number_catalan(long n, const Rational& lambda) {
  require_nonneg(n, "n");
  require_not_one(lambda);
  Rational value(catalan(n));
  value *= two_pow(n + 1) * lambda.pow(2 * n) / (lambda - Rational(1)).pow(2 * n + 1);
  return neg_one_pow(n) < 0 ? -value : value;
}

FamilyTable::FamilyTable(FamilyKind kind, std::optional<Rational> parameter, long max_n,
                         long max_k)
    : kind_(kind),
      parameter_(std::move(parameter)),
      max_n_(max_n),
      max_k_(max_k),
      values_(static_cast<size_t>(max_n + 1), std::vector<Rational>(static_cast<size_t>(max_k + 1))) {
  require_nonneg(max_n, "max_n");
  require_nonneg(max_k, "max_k");
}

const Rational& FamilyTable::at(long n, long k) const {
  if (n < 0 || k < 0 || n > max_n_ || k > max_k_) {
    throw Error(ErrorKind::domain, "table index (" + std::to_string(n) + ", " +
                                       std::to_string(k) + ") outside the built range");
  }
  return values_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

FamilyTable FamilyTable::stirling1(long max_n) {
  FamilyTable t(FamilyKind::stirling1, std::nullopt, max_n, max_n);
  // S_1(n+1, m) = S_1(n, m-1) - n S_1(n, m)
  std::vector<BigInt> row{1};
  t.values_[0][0] = 1;
  for (long n = 0; n < max_n; ++n) {
    std::vector<BigInt> next(static_cast<size_t>(n + 2));
    for (long m = 0; m <= n + 1; ++m) {
      BigInt v = 0;
      if (m >= 1) v += row[static_cast<size_t>(m - 1)];
      if (m <= n) v -= BigInt(n) * row[static_cast<size_t>(m)];
      next[static_cast<size_t>(m)] = v;
    }
    row = std::move(next);
    for (long m = 0; m <= n + 1; ++m) {
      t.values_[static_cast<size_t>(n + 1)][static_cast<size_t>(m)] = Rational(row[static_cast<size_t>(m)]);
    }
  }
  return t;
}

void FamilyTable::fill_higher_orders() {
  // Order 0 is the constant series 1; order k is the binomial convolution of
  // order k-1 with order 1.
  values_[0][0] = 1;
  for (long k = 2; k <= max_k_; ++k) {
    for (long n = 0; n <= max_n_; ++n) {
      Rational sum = 0;
      for (long j = 0; j <= n; ++j) {
        const Rational& lower = values_[static_cast<size_t>(j)][static_cast<size_t>(k - 1)];
        const Rational& first = values_[static_cast<size_t>(n - j)][1];
        if (lower.is_zero() || first.is_zero()) continue;
        sum += Rational(binomial(n, j)) * lower * first;
      }
      values_[static_cast<size_t>(n)][static_cast<size_t>(k)] = sum;
    }
  }
}

FamilyTable FamilyTable::apostol_bernoulli(const Rational& lambda, long max_n, long max_k) {
  FamilyTable t(FamilyKind::apostol_bernoulli, lambda, max_n, std::max(max_k, 1L));
  std::vector<Rational> b(static_cast<size_t>(max_n + 1));
  if (lambda == Rational(1)) {
    // Classical: sum_{j=0}^{n} C(n+1, j) B_j = [n = 0].
    b[0] = 1;
    for (long n = 1; n <= max_n; ++n) {
      Rational acc = 0;
      for (long j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * b[static_cast<size_t>(j)];
      b[static_cast<size_t>(n)] = -acc / Rational(n + 1);
    }
  } else {
    // lambda sum_{j=0}^{n} C(n, j) B_j - B_n = [n = 1], with B_0 = 0.
    const Rational inv = (lambda - Rational(1)).reciprocal();
    for (long n = 1; n <= max_n; ++n) {
      Rational acc = 0;
      for (long j = 0; j < n; ++j) acc += Rational(binomial(n, j)) * b[static_cast<size_t>(j)];
      b[static_cast<size_t>(n)] = (Rational(n == 1 ? 1 : 0) - lambda * acc) * inv;
    }
  }
  for (long n = 0; n <= max_n; ++n) t.values_[static_cast<size_t>(n)][1] = b[static_cast<size_t>(n)];
  t.fill_higher_orders();
  t.max_k_ = max_k;
  return t;
}

FamilyTable FamilyTable::apostol_euler(const Rational& lambda, long max_n, long max_k) {
  if (lambda == Rational(-1)) throw Error(ErrorKind::pole, "Apostol-Euler pole at lambda = -1");
  FamilyTable t(FamilyKind::apostol_euler, lambda, max_n, std::max(max_k, 1L));
  // lambda sum_{j=0}^{n} C(n, j) E_j + E_n = 2 [n = 0].
  const Rational inv = (lambda + Rational(1)).reciprocal();
  std::vector<Rational> e(static_cast<size_t>(max_n + 1));
  for (long n = 0; n <= max_n; ++n) {
    Rational acc = 0;
    for (long j = 0; j < n; ++j) acc += Rational(binomial(n, j)) * e[static_cast<size_t>(j)];
    e[static_cast<size_t>(n)] = (Rational(n == 0 ? 2 : 0) - lambda * acc) * inv;
  }
  for (long n = 0; n <= max_n; ++n) t.values_[static_cast<size_t>(n)][1] = e[static_cast<size_t>(n)];
  t.fill_higher_orders();
  t.max_k_ = max_k;
  return t;
}

}  // namespace ylab
