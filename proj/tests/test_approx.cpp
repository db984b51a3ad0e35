#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ylab/approx.hpp"
#include "ylab/error.hpp"
#include "ylab/families.hpp"

using namespace ylab;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an ylab::Error");
  return ErrorKind::usage;
}

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

TEST_SUITE("approx") {

TEST_CASE("Stirling factorial approximation") {
  CHECK(stirling_factorial_approx(10) == doctest::Approx(3598695.6187).epsilon(1e-9));
  CHECK(rel(stirling_factorial_approx(10), 3628800.0) == doctest::Approx(0.0083).epsilon(0.02));
  CHECK(stirling_factorial_approx(1) == doctest::Approx(std::sqrt(2 * std::numbers::pi) / std::numbers::e));
  CHECK(std::isfinite(stirling_factorial_approx(170)));
  CHECK(std::isinf(stirling_factorial_approx(200)));
  CHECK(kind_of([] { stirling_factorial_approx(0); }) == ErrorKind::domain);
}

TEST_CASE("Catalan approximation") {
  CHECK(catalan_approx(10) == doctest::Approx(18707.9).epsilon(1e-5));
  CHECK(catalan_approx(1) == doctest::Approx(4.0 / std::sqrt(std::numbers::pi)));
  const double e10 = rel(catalan_approx(10), 16796.0);
  const double e100 = rel(catalan_approx(100), Rational(catalan(100)).to_double());
  CHECK(e100 < e10);
  CHECK(kind_of([] { catalan_approx(0); }) == ErrorKind::domain);
}

TEST_CASE("V approximation at lambda = -1") {
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  CHECK(v_approx(1, -1) == doctest::Approx(2.0 * inv_sqrt_pi).epsilon(1e-14));
  CHECK(v_approx(5, -1) == doctest::Approx(32.0 / (5.0 * std::sqrt(5.0)) * inv_sqrt_pi).epsilon(1e-14));
  CHECK(v_approx(10, -1) == doctest::Approx(-1024.0 / (10.0 * std::sqrt(10.0)) * inv_sqrt_pi).epsilon(1e-14));
  CHECK(rel(v_approx(125, -1), 1.7171e34) < 1e-3);
  CHECK(kind_of([] { v_approx(3, 1); }) == ErrorKind::pole);
  CHECK(kind_of([] { v_approx(0, 2); }) == ErrorKind::domain);
  CHECK(v_approx(3, 0) == 0.0);
}

TEST_CASE("V approximation keeps the exact sign") {
  for (const char* l : {"-2", "-1", "-1/2", "1/3", "2", "5/2", "3"}) {
    for (long n = 1; n <= 60; ++n) {
      const Rational exact = v_number(n, q(l));
      REQUIRE((v_approx(n, q(l)) < 0) == (exact.sign() < 0));
    }
  }
}

TEST_CASE("approximation table") {
  const auto rows = v_approx_table({1, 5, 10, 125}, -1);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].exact == q("1/2"));
  CHECK(rows[2].exact == q("-4199/256"));
  CHECK(rows[2].exact.to_double() == -16.40234375);
  CHECK(rel(rows[3].exact.to_double(), 1.7018e34) < 1e-3);
  for (const auto& r : rows) {
    const double direct = std::fabs(r.approx - r.exact.to_double()) / std::fabs(r.exact.to_double());
    CHECK(r.rel_error == doctest::Approx(direct).epsilon(1e-9));
  }
}

TEST_CASE("relative error shrinks with n") {
  const auto rows = v_approx_table({10, 20, 40, 80}, -1);
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].rel_error < rows[i - 1].rel_error);
}

TEST_CASE("huge n stays finite in log space") {
  const auto rows = v_approx_table({2000}, -1);
  CHECK(std::isinf(rows[0].approx));
  CHECK(std::isfinite(rows[0].rel_error));
  CHECK(rows[0].rel_error < 1e-3);
}

TEST_CASE("V ratio") {
  CHECK(v_ratio_asymptotic(-1) == -2.0);
  CHECK(v_ratio_exact(1, -1) == -1);
  CHECK(kind_of([] { v_ratio_asymptotic(1); }) == ErrorKind::pole);
  const double limit = v_ratio_asymptotic(-1);
  double prev = INFINITY;
  for (long n = 0; n <= 100; ++n) {
    const double gap = std::fabs(v_ratio_exact(n, -1).to_double() - limit);
    REQUIRE(gap < prev);
    prev = gap;
  }
  for (long n = 0; n <= 20; ++n) {
    REQUIRE(v_number(n + 1, q("5/2")) == v_ratio_exact(n, q("5/2")) * v_number(n, q("5/2")));
  }
}

TEST_CASE("zeta partial sums: examples") {
  CHECK(zeta_partial_sum(q("1/3"), 0, 1, 60) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(zeta_partial_sum(q("1/3"), 1, 1, 100) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(zeta_partial_sum(0, 0, 1, 5) == 1.0);
  CHECK(zeta_partial_sum(0, 0, 3, 50) == 1.0);
  CHECK(zeta_target(q("1/3"), 0, 1) == q("3/2"));
  CHECK(kind_of([] { zeta_partial_sum(1, 0, 1, 10); }) == ErrorKind::domain);
  CHECK(kind_of([] { zeta_partial_sum(q("-3/2"), 0, 1, 10); }) == ErrorKind::domain);
  CHECK(kind_of([] { zeta_partial_sum(q("1/2"), 0, 0, 10); }) == ErrorKind::domain);
  CHECK(kind_of([] { zeta_partial_sum(q("1/2"), 0, 1, 0); }) == ErrorKind::domain);
}

TEST_CASE("zeta partial sums converge to the order-k limit") {
  for (const char* l : {"1/3", "-1/2"}) {
    for (long k = 1; k <= 3; ++k) {
      for (long m = 0; m <= 3; ++m) {
        CAPTURE(l);
        CAPTURE(k);
        CAPTURE(m);
        const double e100 = zeta_error(q(l), m, k, 100, ZetaTarget::order_k);
        const double e200 = zeta_error(q(l), m, k, 200, ZetaTarget::order_k);
        CHECK(e200 < 1e-8);
        CHECK(e200 < e100);
      }
    }
  }
}

TEST_CASE("printed and order-k limits coincide only at k = 1") {
  for (const char* l : {"1/3", "-1/2"}) {
    for (long m = 0; m <= 3; ++m) {
      CHECK(zeta_target(q(l), m, 1, ZetaTarget::printed) == zeta_target(q(l), m, 1, ZetaTarget::order_k));
    }
    // k = 2, m = 0: the printed limit is -B_1^(2) = 0 while the sums tend to 1/(1-lambda)^2.
    const Rational one_minus = Rational(1) - q(l);
    CHECK(zeta_target(q(l), 0, 2, ZetaTarget::printed) == 0);
    CHECK(zeta_target(q(l), 0, 2, ZetaTarget::order_k) == (one_minus * one_minus).reciprocal());
  }
}

}  // TEST_SUITE
