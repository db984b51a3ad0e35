#include <doctest.h>

#include <vector>

#include "ylab/error.hpp"
#include "ylab/series.hpp"

using namespace ylab;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

TruncatedSeries series(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* s : coeffs) c.push_back(q(s));
  return TruncatedSeries(c);
}

std::vector<Rational> values(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(q(s));
  return out;
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

// Independent Y oracle: (-1)^n 2 n!/(lambda-1) (lambda^2/(lambda-1))^n for k = 1.
Rational y_first_order(long n, const Rational& lambda) {
  Rational fact = 1;
  for (long i = 2; i <= n; ++i) fact *= Rational(i);
  Rational v = Rational(2) * fact / (lambda - Rational(1)) * (lambda * lambda / (lambda - Rational(1))).pow(n);
  return n % 2 ? -v : v;
}

}  // namespace

TEST_SUITE("power-series") {

TEST_CASE("add, multiply, order checks") {
  CHECK(ps_mul(series({"1", "1", "0"}), series({"1", "-1", "0"})) == series({"1", "0", "-1"}));
  const auto a = series({"3", "1/2", "-7"});
  CHECK(ps_mul(a, TruncatedSeries::constant(1, 3)) == a);
  CHECK(ps_mul(series({"1", "1", "1", "1"}), series({"1", "1", "1", "1"})) == series({"1", "2", "3", "4"}));
  CHECK(ps_add(series({"1", "2"}), series({"3", "-2"})) == series({"4", "0"}));
  CHECK(ps_sub(series({"1", "2"}), series({"3", "-2"})) == series({"-2", "4"}));
  CHECK(kind_of([] { ps_add(series({"1"}), series({"1", "2"})); }) == ErrorKind::order_mismatch);
  CHECK(kind_of([] { ps_mul(series({"1"}), series({"1", "2"})); }) == ErrorKind::order_mismatch);
  CHECK(ps_mul(TruncatedSeries(0), TruncatedSeries(0)).order() == 0);
}

TEST_CASE("division") {
  CHECK(ps_div(TruncatedSeries::constant(1, 4), series({"1", "-1", "0", "0"})) == series({"1", "1", "1", "1"}));
  const auto a = series({"2", "5", "-1/3"});
  CHECK(ps_div(a, a) == series({"1", "0", "0"}));
  CHECK(kind_of([] { ps_div(series({"1", "1"}), series({"0", "1"})); }) == ErrorKind::non_invertible);
  // 2/(lambda(1+lambda t)-1) at lambda = 3: coefficients Y_n(3)/n!.
  const auto y = ps_div(TruncatedSeries::constant(2, 3), series({"2", "9", "0"}));
  CHECK(y == series({"1", "-9/2", "81/4"}));
}

TEST_CASE("powers") {
  CHECK(ps_pow(series({"1", "1", "0"}), 2) == series({"1", "2", "1"}));
  CHECK(ps_pow(series({"5", "1", "7"}), 0) == series({"1", "0", "0"}));
  CHECK(ps_pow(series({"1", "1", "0"}), 3) == series({"1", "3", "3"}));
  CHECK(ps_pow(series({"1", "1", "0", "0", "0"}), 4) == series({"1", "4", "6", "4", "1"}));
}

TEST_CASE("log, exp and the binomial series") {
  CHECK(ps_log1p(1, 4) == series({"0", "1", "-1/2", "1/3"}));
  CHECK(ps_log1p(0, 4) == series({"0", "0", "0", "0"}));
  CHECK(ps_log1p(2, 3) == series({"0", "2", "-2"}));
  CHECK(kind_of([] { ps_log1p(1, 0); }) == ErrorKind::domain);

  CHECK(ps_exp(series({"0", "1", "0", "0"})) == series({"1", "1", "1/2", "1/6"}));
  CHECK(ps_exp(series({"0", "0", "0"})) == series({"1", "0", "0"}));
  CHECK(ps_exp(ps_log1p(1, 4)) == series({"1", "1", "0", "0"}));
  CHECK(kind_of([] { ps_exp(series({"1", "0"})); }) == ErrorKind::domain);

  CHECK(ps_binom_x(2, 1, 4) == series({"1", "2", "1", "0"}));
  CHECK(ps_binom_x(0, q("5/2"), 3) == series({"1", "0", "0"}));
  CHECK(ps_binom_x(q("1/2"), 1, 3) == series({"1", "1/2", "-1/8"}));
  CHECK(kind_of([] { ps_binom_x(1, 1, 0); }) == ErrorKind::domain);
}

TEST_CASE("Y generating function expansions") {
  CHECK(expand_y_gf(2, 3, 2) == values({"1", "-9"}));
  CHECK(expand_y_gf(0, q("-1/2"), 4) == values({"1", "0", "0", "0"}));
  const auto y = expand_y_gf(1, -1, 10);
  for (long n = 0; n < 10; ++n) {
    Rational fact = 1;
    for (long i = 2; i <= n; ++i) fact *= Rational(i);
    CHECK(y[static_cast<size_t>(n)] == -fact / Rational(2).pow(n));
  }
  for (const char* l : {"-2", "1/3", "5/2", "0"}) {
    const auto s = expand_y_gf(1, q(l), 12);
    for (long n = 0; n < 12; ++n) CHECK(s[static_cast<size_t>(n)] == y_first_order(n, q(l)));
  }
  CHECK(kind_of([] { expand_y_gf(1, 1, 4); }) == ErrorKind::pole);
}

TEST_CASE("Y polynomial generating function") {
  for (const char* l : {"-2", "1/3", "3"}) {
    CHECK(expand_y_poly_gf(2, 0, q(l), 8) == expand_y_gf(2, q(l), 8));
  }
  CHECK(expand_y_poly_gf(1, 1, 3, 1) == values({"1"}));
  // k = 1, x = 1, lambda = 3: Y_1(1;3) = 3 Y_0(3) + Y_1(3) = 3 - 9/2.
  CHECK(expand_y_poly_gf(1, 1, 3, 2)[1] == q("-3/2"));
  CHECK(kind_of([] { expand_y_poly_gf(1, 2, 1, 3); }) == ErrorKind::pole);
}

TEST_CASE("Stirling generating function") {
  const auto s1 = expand_stirling1_gf(1, 8);
  Rational fact = 1;
  for (long n = 1; n < 8; ++n) {
    if (n > 1) fact *= Rational(n - 1);
    CHECK(s1[static_cast<size_t>(n)] == (n % 2 ? fact : -fact));
  }
  CHECK(expand_stirling1_gf(0, 4) == values({"1", "0", "0", "0"}));
  CHECK(expand_stirling1_gf(2, 5)[4] == 11);
}

TEST_CASE("Apostol generating functions") {
  // B(lambda) for k = 1: t/(lambda e^t - 1) with B_0 = 0, B_1 = 1/(lambda - 1).
  const auto b = expand_apostol_gf(ApostolKind::bernoulli, 1, 2, 4);
  CHECK(b[0] == 0);
  CHECK(b[1] == 1);
  CHECK(b[2] == -4);  // -2 lambda / (lambda - 1)^2
  CHECK(kind_of([] { expand_apostol_gf(ApostolKind::bernoulli, 1, 1, 4); }) == ErrorKind::pole);

  const auto e = expand_apostol_gf(ApostolKind::euler, 1, 1, 5);
  CHECK(e == values({"1", "-1/2", "0", "1/4", "0"}));  // classical Euler polynomials E_n(0)
  CHECK(expand_apostol_gf(ApostolKind::euler, 1, 3, 1) == values({"1/2"}));
  CHECK(kind_of([] { expand_apostol_gf(ApostolKind::euler, 1, -1, 4); }) == ErrorKind::pole);
  CHECK(expand_apostol_gf(ApostolKind::euler, 0, 5, 3) == values({"1", "0", "0"}));
}

}  // TEST_SUITE
