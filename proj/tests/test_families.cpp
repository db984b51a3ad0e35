#include <doctest.h>

#include <vector>

#include "ylab/combinatorics.hpp"
#include "ylab/error.hpp"
#include "ylab/families.hpp"
#include "ylab/series.hpp"

using namespace ylab;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

const std::vector<Rational>& grid_lambdas() {
  static const std::vector<Rational> l{q("-2"), q("-1"), q("-1/2"), q("1/3"), q("2"), q("5/2"), q("3")};
  return l;
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

TEST_SUITE("families") {

TEST_CASE("closed form examples") {
  CHECK(y_number(2, 2, 2) == 384);
  CHECK(y_number(3, 3, 2) == -30720);
  CHECK(y_number(0, 1, 3) == 1);
  CHECK(y_number(0, 0, q("5/2")) == 1);
  CHECK(y_number(4, 0, q("5/2")) == 0);
  CHECK(kind_of([] { y_number(1, 1, 1); }) == ErrorKind::pole);
  CHECK(kind_of([] { y_number(-1, 1, 2); }) == ErrorKind::domain);
}

TEST_CASE("lambda = 0 needs no special case") {
  for (long k = 0; k <= 5; ++k) {
    CHECK(y_number(0, k, 0) == Rational(-2).pow(k));
    for (long n = 1; n <= 6; ++n) CHECK(y_number(n, k, 0) == 0);
  }
}

TEST_CASE("recurrence route") {
  CHECK(y_number_recurrence(1, 2, 3) == -9);
  CHECK(y_number_recurrence(0, 3, 3) == 1);
  CHECK(y_number_recurrence(3, 0, 2) == 0);
  CHECK(kind_of([] { y_number_recurrence(2, 2, 1); }) == ErrorKind::pole);
}

TEST_CASE("listed rational functions") {
  const auto lp = [](long p) { return Polynomial::linear_power(1, p); };
  CHECK(y_number_ratfun(0, 2) == RationalFunction(poly({"4"}), lp(2)));
  CHECK(y_number_ratfun(1, 2) == RationalFunction(poly({"0", "0", "-8"}), lp(3)));
  CHECK(y_number_ratfun(2, 3) == RationalFunction(poly({"0", "0", "0", "0", "96"}), lp(5)));
  CHECK(y_number_ratfun(0, 0) == RationalFunction(poly({"1"})));
  CHECK(y_number_ratfun(3, 0) == RationalFunction(Polynomial()));
}

TEST_CASE("route agreement over the grid: n <= 20, k <= 6") {
  for (const auto& lambda : grid_lambdas()) {
    for (long k = 0; k <= 6; ++k) {
      const auto series = expand_y_gf(static_cast<unsigned long>(k), lambda, 21);
      for (long n = 0; n <= 20; ++n) {
        const Rational closed = y_number(n, k, lambda);
        CAPTURE(lambda.to_string());
        CAPTURE(k);
        CAPTURE(n);
        REQUIRE(closed == y_number_recurrence(n, k, lambda));
        REQUIRE(closed == series[static_cast<size_t>(n)]);
        REQUIRE(closed == y_number_ratfun(n, k)(lambda));
      }
    }
  }
}

TEST_CASE("first-order reduction") {
  for (const auto& lambda : grid_lambdas()) {
    for (long n = 0; n <= 20; ++n) {
      Rational v = Rational(2) * Rational(factorial(n)) / (lambda - Rational(1)) *
                   (lambda * lambda / (lambda - Rational(1))).pow(n);
      if (n % 2) v = -v;
      REQUIRE(y_number(n, 1, lambda) == v);
    }
  }
}

TEST_CASE("Y polynomials") {
  CHECK(y_polynomial(3, 2, 0, 3) == y_number(3, 2, 3));
  CHECK(y_polynomial(1, 1, 1, 3) == q("-3/2"));
  CHECK(y_polynomial(0, 2, 7, 2) == 4);
  CHECK(y_polynomial(1, 2, 2, 2) == expand_y_poly_gf(2, 2, 2, 2)[1]);
  CHECK(kind_of([] { y_polynomial(1, 1, 0, 1); }) == ErrorKind::pole);
}

TEST_CASE("Stirling numbers of the first kind") {
  CHECK(stirling1(4, 2) == 11);
  CHECK(stirling1(5, 1) == 24);
  CHECK(stirling1(7, 7) == 1);
  CHECK(stirling1(3, 4) == 0);
  CHECK(stirling1(-1, 0) == 0);
  CHECK(stirling1(0, 0) == 1);
  const auto table = FamilyTable::stirling1(15);
  for (long x = -3; x <= 5; ++x) {
    for (long n = 0; n <= 15; ++n) {
      Rational sum = 0;
      for (long m = 0; m <= n; ++m) sum += table.at(n, m) * Rational(x).pow(m);
      REQUIRE(sum == falling_factorial(x, n));
    }
  }
  for (long n = 0; n <= 15; ++n) {
    for (long m = 0; m <= n; ++m) REQUIRE(table.at(n, m).is_integer());
  }
  // Column k of the series oracle.
  for (long k = 0; k <= 5; ++k) {
    const auto col = expand_stirling1_gf(static_cast<unsigned long>(k), 16);
    for (long n = k; n < 16; ++n) REQUIRE(col[static_cast<size_t>(n)] == table.at(n, k));
  }
}

TEST_CASE("Apostol-Bernoulli numbers") {
  CHECK(apostol_bernoulli(0, 1, 2) == 0);
  CHECK(apostol_bernoulli(1, 1, 2) == 1);
  CHECK(apostol_bernoulli(2, 1, 1) == q("1/6"));
  CHECK(apostol_bernoulli(1, 1, 1) == q("-1/2"));
  CHECK(apostol_bernoulli(12, 1, 1) == q("-691/2730"));
  CHECK(apostol_bernoulli(0, 0, 2) == 1);
  CHECK(apostol_bernoulli(3, 0, 2) == 0);
  // Classical B^(2)_2 = 5/6 (Norlund polynomials at 0).
  CHECK(apostol_bernoulli(2, 2, 1) == q("5/6"));
  for (const auto& lambda : grid_lambdas()) {
    for (long k = 0; k <= 4; ++k) {
      const auto series = expand_apostol_gf(ApostolKind::bernoulli, static_cast<unsigned long>(k), lambda, 17);
      const auto table = FamilyTable::apostol_bernoulli(lambda, 16, k);
      for (long n = 0; n <= 16; ++n) REQUIRE(table.at(n, k) == series[static_cast<size_t>(n)]);
    }
  }
}

TEST_CASE("Apostol-Euler numbers") {
  CHECK(apostol_euler(0, 1, 1) == 1);
  CHECK(apostol_euler(0, 1, 3) == q("1/2"));
  CHECK(apostol_euler(1, 1, 1) == q("-1/2"));
  CHECK(kind_of([] { apostol_euler(0, 1, -1); }) == ErrorKind::pole);
  for (const auto& lambda : grid_lambdas()) {
    if (lambda == Rational(-1)) continue;
    for (long k = 0; k <= 4; ++k) {
      const auto series = expand_apostol_gf(ApostolKind::euler, static_cast<unsigned long>(k), lambda, 17);
      const auto table = FamilyTable::apostol_euler(lambda, 16, k);
      for (long n = 0; n <= 16; ++n) REQUIRE(table.at(n, k) == series[static_cast<size_t>(n)]);
    }
  }
}

TEST_CASE("family tables are bounded") {
  const auto t = FamilyTable::apostol_bernoulli(2, 5, 2);
  CHECK(t.max_n() == 5);
  CHECK(t.max_k() == 2);
  CHECK(t.kind() == FamilyKind::apostol_bernoulli);
  CHECK(*t.parameter() == 2);
  CHECK(kind_of([&] { t.at(6, 0); }) == ErrorKind::domain);
  CHECK(kind_of([&] { t.at(0, 3); }) == ErrorKind::domain);
  CHECK_FALSE(FamilyTable::stirling1(3).parameter().has_value());
}

TEST_CASE("Catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  BigInt prev = 1;
  for (long n = 1; n <= 200; ++n) {
    const BigInt c = catalan(n);
    REQUIRE(c * (n + 1) == prev * (4 * n - 2));
    REQUIRE(c * (n + 1) == binomial(2 * n, n));
    prev = c;
  }
}

TEST_CASE("Bernstein basis") {
  CHECK(bernstein(0, 1, q("1/3")) == q("2/3"));
  CHECK(bernstein(1, 2, q("1/2")) == q("1/2"));
  CHECK(bernstein(3, 2, q("1/2")) == 0);
  CHECK(bernstein(-1, 2, q("1/2")) == 0);
  for (const auto& lambda : grid_lambdas()) {
    for (long k = 0; k <= 10; ++k) {
      Rational sum = 0;
      for (long j = 0; j <= k; ++j) sum += bernstein(j, k, lambda);
      REQUIRE(sum == 1);
    }
  }
}

TEST_CASE("V numbers") {
  CHECK(v_number(1, -1) == q("1/2"));
  CHECK(v_number(5, -1) == q("21/16"));
  CHECK(v_number(10, -1) == q("-4199/256"));
  CHECK(kind_of([] { v_number(2, 1); }) == ErrorKind::pole);
  for (const auto& lambda : grid_lambdas()) {
    for (long n = 0; n <= 40; ++n) REQUIRE(v_number(n, lambda) == v_number_catalan(n, lambda));
  }
}

}  // TEST_SUITE
