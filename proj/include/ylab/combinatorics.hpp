#pragma once

#include <span>

#include "ylab/rational.hpp"

namespace ylab {

/// Binomial coefficient for any integer pair.
///
/// C(n, 0) = 1 for every n (including negative n), C(n, j) = 0 for j < 0, and
/// C(n, j) = 0 for 0 <= n < j. Negative n with j > 0 uses the generalized
/// definition n(n-1)...(n-j+1)/j!.
BigInt binomial(long n, long j);

/// n!; Error(domain) for negative n.
BigInt factorial(long n);

/// (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1.
Rational falling_factorial(const Rational& x, long n);

/// (x)^(n) = x(x+1)...(x+n-1), with (x)^(0) = 1.
Rational rising_factorial(const Rational& x, long n);

/// n! / (parts[0]! ... parts[last]! (n - sum(parts))!).
/// Error(domain) when sum(parts) > n or any part is negative.
BigInt multinomial(long n, std::span<const long> parts);

}  // namespace ylab
