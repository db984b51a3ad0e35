#include <doctest.h>

#include <random>
#include <vector>

#include "ylab/combinatorics.hpp"
#include "ylab/error.hpp"
#include "ylab/polynomial.hpp"
#include "ylab/rational.hpp"

using namespace ylab;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

// Independent oracle: prod_{i=1}^{j} (n - j + i) / i, exact.
BigInt binomial_by_product(long n, long j) {
  BigInt num = 1, den = 1;
  for (long i = 1; i <= j; ++i) {
    num *= n - j + i;
    den *= i;
  }
  return num / den;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an ylab::Error");
  return ErrorKind::usage;
}

Polynomial poly(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* s : coeffs) c.push_back(q(s));
  return Polynomial(c);
}

}  // namespace

TEST_SUITE("exact-core") {

TEST_CASE("rational parsing and canonical form") {
  CHECK(q("6/8").to_string() == "3/4");
  CHECK(q("-6/8").to_string() == "-3/4");
  CHECK(q("  -3 ").to_string() == "-3");
  CHECK(q("+5/1").to_string() == "5");
  CHECK(q("\xE2\x88\x92" "1/2").to_string() == "-1/2");
  CHECK(q("0/7").to_string() == "0");
  CHECK(q("0/7").denominator() == 1);
  CHECK(Rational::parse_decimal("-0.25") == q("-1/4"));
  CHECK(Rational::parse_decimal("3") == Rational(3));
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "--1", "1.5"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { Rational::parse(bad); }) == ErrorKind::parse);
  }
  CHECK(kind_of([] { Rational(BigInt(1), BigInt(0)); }) == ErrorKind::domain);
}

TEST_CASE("rational arithmetic") {
  CHECK(q("1/2") + q("1/3") == q("5/6"));
  CHECK(q("1/2") - q("1/3") == q("1/6"));
  CHECK(q("2/3") * q("9/4") == q("3/2"));
  CHECK(q("2/3") / q("4/9") == q("3/2"));
  CHECK(q("-2/3").pow(3) == q("-8/27"));
  CHECK(q("2/3").pow(-2) == q("9/4"));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK(kind_of([] { (void)(q("1") / Rational(0)); }) == ErrorKind::domain);
  CHECK(kind_of([] { (void)Rational(0).pow(-1); }) == ErrorKind::domain);
  CHECK(q("-1/3") < q("-1/4"));
  CHECK(q("-7/2").abs() == q("7/2"));
}

TEST_CASE("rational to double survives huge operands") {
  // 10^400 / (3 * 10^399) = 10/3
  BigInt big = 1;
  for (int i = 0; i < 400; ++i) big *= 10;
  const Rational r(big, BigInt(3) * (big / 10));
  CHECK(r.to_double() == doctest::Approx(10.0 / 3.0).epsilon(1e-15));
  CHECK(r.log_abs() == doctest::Approx(std::log(10.0 / 3.0)).epsilon(1e-12));
  CHECK(q("-1/3").to_double() == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("binomial conventions and examples") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(-1, 0) == 1);
  CHECK(binomial(-5, 0) == 1);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 3) == -1);  // (-1)(-2)(-3)/3!
  const BigInt central = binomial(250, 125);
  CHECK(central == binomial_by_product(250, 125));
  CHECK(central.get_str().size() == 74);
}

TEST_CASE("Pascal identity, exhaustive for n <= 64") {
  for (long n = 1; n <= 64; ++n) {
    for (long j = 1; j <= n; ++j) {
      REQUIRE(binomial(n, j) == binomial(n - 1, j - 1) + binomial(n - 1, j));
    }
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  BigInt p = 1;
  for (long i = 2; i <= 126; ++i) p *= i;
  CHECK(factorial(126) == p);
  CHECK(kind_of([] { factorial(-1); }) == ErrorKind::domain);
}

TEST_CASE("falling and rising factorials") {
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(q("1/2"), 2) == q("-1/4"));
  CHECK(falling_factorial(3, 5) == 0);
  CHECK(falling_factorial(q("7/3"), 0) == 1);
  CHECK(rising_factorial(1, 3) == 6);
  CHECK(rising_factorial(2, 0) == 1);
  CHECK(rising_factorial(q("1/2"), 2) == q("3/4"));
}

TEST_CASE("falling/rising symmetry on random rationals") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 12), len(0, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational x(BigInt(num(rng)), BigInt(den(rng)));
    const long n = len(rng);
    CAPTURE(x.to_string());
    CAPTURE(n);
    REQUIRE(falling_factorial(x, n) == rising_factorial(x - Rational(n - 1), n));
  }
}

TEST_CASE("multinomial") {
  const std::vector<long> a{2, 1}, none{}, b{2, 2}, too_big{3, 2};
  CHECK(multinomial(4, a) == 12);
  CHECK(multinomial(3, none) == 1);
  CHECK(multinomial(6, b) == 90);
  CHECK(kind_of([&] { multinomial(4, too_big); }) == ErrorKind::domain);
}

TEST_CASE("polynomial basics") {
  const Polynomial p = poly({"-1", "0", "1"});  // l^2 - 1
  CHECK(p.degree() == 2);
  CHECK(Polynomial().degree() == -1);
  CHECK(poly({"1", "2", "0", "0"}).degree() == 1);
  CHECK(p(q("3")) == 8);
  CHECK(p.derivative() == poly({"0", "2"}));
  CHECK(Polynomial::linear_power(1, 3) == poly({"-1", "3", "-3", "1"}));
  const auto [quot, rem] = p.divmod(poly({"-1", "1"}));
  CHECK(quot == poly({"1", "1"}));
  CHECK(rem.is_zero());
  CHECK(gcd(poly({"-1", "0", "1"}), poly({"1", "2", "1"})) == poly({"1", "1"}));
  CHECK(gcd(poly({"2"}), poly({"0", "1"})) == poly({"1"}));
  CHECK(Polynomial::linear_power(1, 3).to_string() == "l^3 - 3*l^2 + 3*l - 1");
  CHECK(poly({"0", "0", "-8"}).to_string() == "-8*l^2");
  CHECK(poly({"1/2", "-1"}).to_string() == "-l + 1/2");
}

TEST_CASE("polynomial derivative follows the coefficient rule, degree <= 8") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> c(-9, 9), d(1, 5), deg(0, 8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> coeffs;
    const long degree = deg(rng);
    for (long i = 0; i <= degree; ++i) coeffs.emplace_back(BigInt(c(rng)), BigInt(d(rng)));
    const Polynomial p(coeffs);
    const Polynomial dp = p.derivative();
    for (long i = 0; i + 1 < static_cast<long>(coeffs.size()); ++i) {
      REQUIRE(dp.coeff(i) == Rational(i + 1) * coeffs[static_cast<size_t>(i + 1)]);
    }
    REQUIRE(dp.degree() <= std::max(p.degree() - 1, -1L));
  }
}

TEST_CASE("rational function canonical form") {
  const Polynomial num = poly({"0", "0", "-8"});
  const Polynomial den = Polynomial::linear_power(1, 3);
  const RationalFunction f(num, den);
  for (const char* c : {"3", "-1/7", "22/5"}) {
    const Rational scale = q(c);
    const RationalFunction g(num * scale, den * scale);
    CHECK(g.num() == f.num());
    CHECK(g.den() == f.den());
  }
  // (l^2 - 1) / (l - 1) reduces to l + 1.
  const RationalFunction h(poly({"-1", "0", "1"}), poly({"-2", "2"}));
  CHECK(h.num() == poly({"1/2", "1/2"}));
  CHECK(h.den() == poly({"1"}));
  CHECK(RationalFunction(Polynomial(), poly({"5", "1"})).den() == poly({"1"}));
  CHECK(kind_of([] { RationalFunction(poly({"1"}), Polynomial()); }) == ErrorKind::domain);
  CHECK(f.to_string() == "-8*l^2 / (l^3 - 3*l^2 + 3*l - 1)");
  CHECK(f.to_factored_string() == "-8*l^2 / (l-1)^3");
  CHECK(f.pure_linear_power(1) == 3);
  CHECK(RationalFunction(poly({"1"}), poly({"1", "1"})).pure_linear_power(1) == -1);
}

TEST_CASE("rational function derivative and evaluation") {
  const RationalFunction two_over(poly({"2"}), poly({"-1", "1"}));
  const RationalFunction expected(poly({"-2"}), Polynomial::linear_power(1, 2));
  CHECK(two_over.derivative() == expected);
  CHECK(RationalFunction(poly({"5"})).derivative() == RationalFunction(Polynomial()));
  CHECK(RationalFunction(poly({"0", "0", "1"})).derivative() == RationalFunction(poly({"0", "2"})));

  CHECK(RationalFunction(poly({"4"}), Polynomial::linear_power(1, 2))(3) == 1);
  CHECK(RationalFunction(poly({"0", "0", "-8"}), Polynomial::linear_power(1, 3))(-1) == 1);
  CHECK(kind_of([&] { two_over(1); }) == ErrorKind::pole);
}

TEST_CASE("rational function derivative matches an exact difference quotient limit") {
  // For f = P/Q, (f(a+h) - f(a))/h is a rational function of h; its value at
  // h -> 0 is the derivative. Check with a symbolic h by clearing denominators.
  const RationalFunction f(poly({"1", "-2", "0", "3"}), poly({"2", "0", "1"}));
  const RationalFunction df = f.derivative();
  for (const char* a : {"0", "1/2", "-3", "5/7"}) {
    const Rational x = q(a);
    // Small exact h sequence: the quotient converges to df(x) at rate O(h).
    const Rational h1(BigInt(1), BigInt(1000000)), h2(BigInt(1), BigInt(2000000));
    const Rational e1 = ((f(x + h1) - f(x)) / h1 - df(x)).abs();
    const Rational e2 = ((f(x + h2) - f(x)) / h2 - df(x)).abs();
    CAPTURE(a);
    CHECK(e2 < e1);
    CHECK(e1 < Rational(BigInt(1), BigInt(10000)));
  }
}

TEST_CASE("rational function arithmetic") {
  const RationalFunction a(poly({"1"}), poly({"-1", "1"}));
  const RationalFunction b(poly({"1"}), poly({"1", "1"}));
  // 1/(l-1) - 1/(l+1) = 2/(l^2-1)
  CHECK(a - b == RationalFunction(poly({"2"}), poly({"-1", "0", "1"})));
  CHECK(a * b == RationalFunction(poly({"1"}), poly({"-1", "0", "1"})));
  CHECK(a / a == RationalFunction(poly({"1"})));
}

}  // TEST_SUITE
