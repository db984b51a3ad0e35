#include "ylab/combinatorics.hpp"

#include <string>

#include "ylab/error.hpp"

namespace ylab {

BigInt binomial(long n, long j) {
  if (j < 0) return 0;
  if (j == 0) return 1;
  if (n >= 0 && j > n) return 0;
  BigInt result;
  const BigInt top(n);
  // mpz_bin_ui handles negative n via C(-n, j) = (-1)^j C(n + j - 1, j).
  mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(j));
  return result;
}

BigInt factorial(long n) {
  if (n < 0) throw Error(ErrorKind::domain, "factorial of negative " + std::to_string(n));
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Rational falling_factorial(const Rational& x, long n) {
  if (n < 0) throw Error(ErrorKind::domain, "falling factorial of negative length");
  Rational product = 1;
  for (long i = 0; i < n; ++i) {
    product *= x - Rational(i);
    if (product.is_zero()) break;
  }
  return product;
}

Rational rising_factorial(const Rational& x, long n) {
  if (n < 0) throw Error(ErrorKind::domain, "rising factorial of negative length");
  Rational product = 1;
  for (long i = 0; i < n; ++i) {
    product *= x + Rational(i);
    if (product.is_zero()) break;
  }
  return product;
}

BigInt multinomial(long n, std::span<const long> parts) {
  if (n < 0) throw Error(ErrorKind::domain, "multinomial with negative n");
  long rest = n;
  for (long p : parts) {
    if (p < 0) throw Error(ErrorKind::domain, "multinomial with negative part");
    rest -= p;
  }
  if (rest < 0) throw Error(ErrorKind::domain, "multinomial parts exceed n");
  // Product of binomials avoids the big factorial quotient.
  BigInt result = 1;
  long remaining = n;
  for (long p : parts) {
    result *= binomial(remaining, p);
    remaining -= p;
  }
  return result;
}

}  // namespace ylab
