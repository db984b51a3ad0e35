#include "ylab/ylab.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "ylab/approx.hpp"
#include "ylab/combinatorics.hpp"
#include "ylab/error.hpp"
#include "ylab/families.hpp"
#include "ylab/identities.hpp"
#include "ylab/polynomial.hpp"
#include "ylab/report_io.hpp"
#include "ylab/series.hpp"

struct ylab_rational {
  ylab::Rational value;
};
struct ylab_ratfun {
  ylab::RationalFunction value;
};
struct ylab_values {
  std::vector<ylab::Rational> values;
};
struct ylab_grid {
  ylab::ParameterGrid grid;
};
struct ylab_reports {
  std::vector<ylab::IdentityReport> reports;
};
struct ylab_approx_table {
  std::vector<ylab::ApproxRecord> records;
};

namespace {

thread_local std::string last_error;

ylab_status status_of(ylab::ErrorKind kind) {
  switch (kind) {
    case ylab::ErrorKind::pole: return YLAB_ERR_POLE;
    case ylab::ErrorKind::domain: return YLAB_ERR_DOMAIN;
    case ylab::ErrorKind::parse: return YLAB_ERR_PARSE;
    case ylab::ErrorKind::non_invertible: return YLAB_ERR_NON_INVERTIBLE;
    case ylab::ErrorKind::order_mismatch: return YLAB_ERR_ORDER_MISMATCH;
    case ylab::ErrorKind::unknown_check: return YLAB_ERR_UNKNOWN_CHECK;
    case ylab::ErrorKind::usage: return YLAB_ERR_USAGE;
  }
  return YLAB_ERR_INTERNAL;
}

ylab_status fail(ylab_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs f, translating exceptions into status codes.
template <class F>
ylab_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return YLAB_OK;
  } catch (const ylab::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(YLAB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(YLAB_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define YLAB_REQUIRE(ptr)                                                     \
  do {                                                                        \
    if ((ptr) == nullptr) return fail(YLAB_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

ylab_status make_rational(ylab::Rational value, ylab_rational** out) {
  *out = new ylab_rational{std::move(value)};
  return YLAB_OK;
}

template <class F>
ylab_status rational_result(ylab_rational** out, F&& compute) {
  YLAB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new ylab_rational{compute()}; });
}

template <class F>
ylab_status values_result(ylab_values** out, F&& compute) {
  YLAB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new ylab_values{compute()}; });
}

template <class F>
ylab_status double_result(double* out, F&& compute) {
  YLAB_REQUIRE(out);
  return guarded([&] { *out = compute(); });
}

template <class F>
ylab_status string_result(char** out, F&& compute) {
  YLAB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = copy_string(compute()); });
}

std::vector<ylab::Rational> parse_list(const char* csv) {
  std::vector<ylab::Rational> out;
  std::string text(csv);
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  size_t start = 0;
  while (true) {
    const size_t comma = text.find(',', start);
    out.push_back(ylab::Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* ylab_status_name(ylab_status status) {
  switch (status) {
    case YLAB_OK: return "ok";
    case YLAB_ERR_POLE: return "pole";
    case YLAB_ERR_DOMAIN: return "domain";
    case YLAB_ERR_PARSE: return "parse";
    case YLAB_ERR_NON_INVERTIBLE: return "non-invertible";
    case YLAB_ERR_ORDER_MISMATCH: return "order-mismatch";
    case YLAB_ERR_UNKNOWN_CHECK: return "unknown-check";
    case YLAB_ERR_USAGE: return "usage";
    case YLAB_ERR_NULL_ARGUMENT: return "null-argument";
    case YLAB_ERR_INTERNAL: return "internal";
  }
  return "internal";
}

const char* ylab_last_error(void) { return last_error.c_str(); }

void ylab_string_free(char* s) { std::free(s); }

const char* ylab_version(void) { return YLAB_VERSION_STRING; }

// ---- Rationals

ylab_status ylab_rational_parse(const char* text, ylab_rational** out) {
  YLAB_REQUIRE(text);
  return rational_result(out, [&] { return ylab::Rational::parse(text); });
}

ylab_status ylab_rational_parse_decimal(const char* text, ylab_rational** out) {
  YLAB_REQUIRE(text);
  return rational_result(out, [&] { return ylab::Rational::parse_decimal(text); });
}

ylab_status ylab_rational_to_string(const ylab_rational* r, char** out) {
  YLAB_REQUIRE(r);
  return string_result(out, [&] { return r->value.to_string(); });
}

double ylab_rational_to_double(const ylab_rational* r) { return r ? r->value.to_double() : 0.0; }

int ylab_rational_equal(const ylab_rational* a, const ylab_rational* b) {
  return a && b && a->value == b->value;
}

void ylab_rational_free(ylab_rational* r) { delete r; }

ylab_status ylab_binomial(long n, long j, ylab_rational** out) {
  return rational_result(out, [&] { return ylab::Rational(ylab::binomial(n, j)); });
}

ylab_status ylab_factorial(long n, ylab_rational** out) {
  return rational_result(out, [&] { return ylab::Rational(ylab::factorial(n)); });
}

// ---- Families

ylab_status ylab_y_number(long n, long k, const ylab_rational* lambda, ylab_rational** out) {
  YLAB_REQUIRE(lambda);
  return rational_result(out, [&] { return ylab::y_number(n, k, lambda->value); });
}

ylab_status ylab_y_number_recurrence(long n, long k, const ylab_rational* lambda, ylab_rational** out) {
  YLAB_REQUIRE(lambda);
  return rational_result(out, [&] { return ylab::y_number_recurrence(n, k, lambda->value); });
}

ylab_status ylab_y_polynomial(long n, long k, const ylab_rational* x, const ylab_rational* lambda,
                              ylab_rational** out) {
  YLAB_REQUIRE(x);
  YLAB_REQUIRE(lambda);
  return rational_result(out, [&] { return ylab::y_polynomial(n, k, x->value, lambda->value); });
}

ylab_status ylab_stirling1(long n, long m, ylab_rational** out) {
  return rational_result(out, [&] { return ylab::Rational(ylab::stirling1(n, m)); });
}

ylab_status ylab_apostol_bernoulli(long n, long k, const ylab_rational* lambda, ylab_rational** out) {
  YLAB_REQUIRE(lambda);
  return rational_result(out, [&] { return ylab::apostol_bernoulli(n, k, lambda->value); });
}

ylab_status ylab_apostol_euler(long n, long k, const ylab_rational* lambda, ylab_rational** out) {
  YLAB_REQUIRE(lambda);
  return rational_result(out, [&] { return ylab::apostol_euler(n, k, lambda->value); });
}

ylab_status ylab_catalan(long n, ylab_rational** out) {
  return rational_result(out, [&] { return ylab::Rational(ylab::catalan(n)); });
}

ylab_status ylab_bernstein(long j, long k, const ylab_rational* lambda, ylab_rational** out) {
  YLAB_REQUIRE(lambda);
  return rational_result(out, [&] { return ylab::bernstein(j, k, lambda->value); });
}

ylab_status ylab_v_number(long n, const ylab_rational* lambda, ylab_rational** out) {
  YLAB_REQUIRE(lambda);
  return rational_result(out, [&] { return ylab::v_number(n, lambda->value); });
}

// ---- Rational functions

ylab_status ylab_y_number_ratfun(long n, long k, ylab_ratfun** out) {
  YLAB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new ylab_ratfun{ylab::y_number_ratfun(n, k)}; });
}

ylab_status ylab_ratfun_derivative(const ylab_ratfun* f, ylab_ratfun** out) {
  YLAB_REQUIRE(f);
  YLAB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new ylab_ratfun{f->value.derivative()}; });
}

ylab_status ylab_ratfun_eval(const ylab_ratfun* f, const ylab_rational* at, ylab_rational** out) {
  YLAB_REQUIRE(f);
  YLAB_REQUIRE(at);
  return rational_result(out, [&] { return f->value(at->value); });
}

ylab_status ylab_ratfun_to_string(const ylab_ratfun* f, int factored, char** out) {
  YLAB_REQUIRE(f);
  return string_result(out, [&] {
    return factored ? f->value.to_factored_string() : f->value.to_string();
  });
}

int ylab_ratfun_equal(const ylab_ratfun* a, const ylab_ratfun* b) {
  return a && b && a->value == b->value;
}

void ylab_ratfun_free(ylab_ratfun* f) { delete f; }

// ---- Series

namespace {

unsigned long order_k(long k) {
  if (k < 0) throw ylab::Error(ylab::ErrorKind::domain, "k must be nonnegative");
  return static_cast<unsigned long>(k);
}

}  // namespace

ylab_status ylab_series_y(long k, const ylab_rational* lambda, size_t order, ylab_values** out) {
  YLAB_REQUIRE(lambda);
  return values_result(out, [&] { return ylab::expand_y_gf(order_k(k), lambda->value, order); });
}

ylab_status ylab_series_ypoly(long k, const ylab_rational* x, const ylab_rational* lambda,
                              size_t order, ylab_values** out) {
  YLAB_REQUIRE(x);
  YLAB_REQUIRE(lambda);
  return values_result(out, [&] {
    return ylab::expand_y_poly_gf(order_k(k), x->value, lambda->value, order);
  });
}

ylab_status ylab_series_stirling1(long k, size_t order, ylab_values** out) {
  return values_result(out, [&] { return ylab::expand_stirling1_gf(order_k(k), order); });
}

ylab_status ylab_series_apostol(ylab_apostol_kind kind, long k, const ylab_rational* lambda,
                                size_t order, ylab_values** out) {
  YLAB_REQUIRE(lambda);
  return values_result(out, [&] {
    const auto family = kind == YLAB_APOSTOL_EULER ? ylab::ApostolKind::euler : ylab::ApostolKind::bernoulli;
    return ylab::expand_apostol_gf(family, order_k(k), lambda->value, order);
  });
}

size_t ylab_values_size(const ylab_values* v) { return v ? v->values.size() : 0; }

ylab_status ylab_values_get(const ylab_values* v, size_t index, ylab_rational** out) {
  YLAB_REQUIRE(v);
  YLAB_REQUIRE(out);
  *out = nullptr;
  if (index >= v->values.size()) return fail(YLAB_ERR_DOMAIN, "index out of range");
  return guarded([&] { make_rational(v->values[index], out); });
}

ylab_status ylab_values_to_json(const ylab_values* v, char** out) {
  YLAB_REQUIRE(v);
  return string_result(out, [&] { return ylab::values_to_json(v->values); });
}

void ylab_values_free(ylab_values* v) { delete v; }

// ---- Verification

size_t ylab_check_count(void) { return ylab::catalog().size(); }

const char* ylab_check_id(size_t index) {
  const auto& c = ylab::catalog();
  return index < c.size() ? c[index].id.data() : nullptr;
}

const char* ylab_check_summary(size_t index) {
  const auto& c = ylab::catalog();
  return index < c.size() ? c[index].summary.data() : nullptr;
}

size_t ylab_check_variant_count(size_t index) {
  const auto& c = ylab::catalog();
  return index < c.size() ? c[index].variants.size() : 0;
}

const char* ylab_check_variant(size_t index, size_t variant) {
  const auto& c = ylab::catalog();
  if (index >= c.size() || variant >= c[index].variants.size()) return nullptr;
  return c[index].variants[variant].data();
}

ylab_status ylab_grid_new(ylab_grid** out) {
  YLAB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new ylab_grid{ylab::ParameterGrid::defaults()}; });
}

ylab_status ylab_grid_set_n(ylab_grid* g, long lo, long hi) {
  YLAB_REQUIRE(g);
  if (lo < 0 || lo > hi) return fail(YLAB_ERR_DOMAIN, "n range must satisfy 0 <= lo <= hi");
  g->grid.n = {lo, hi};
  return YLAB_OK;
}

ylab_status ylab_grid_set_k(ylab_grid* g, long lo, long hi) {
  YLAB_REQUIRE(g);
  if (lo < 0 || lo > hi) return fail(YLAB_ERR_DOMAIN, "k range must satisfy 0 <= lo <= hi");
  g->grid.k = {lo, hi};
  return YLAB_OK;
}

ylab_status ylab_grid_set_m_max(ylab_grid* g, long m_max) {
  YLAB_REQUIRE(g);
  if (m_max < 1) return fail(YLAB_ERR_DOMAIN, "m_max must be at least 1");
  g->grid.m_max = m_max;
  return YLAB_OK;
}

ylab_status ylab_grid_set_lambdas(ylab_grid* g, const char* csv) {
  YLAB_REQUIRE(g);
  YLAB_REQUIRE(csv);
  return guarded([&] { g->grid.lambdas = parse_list(csv); });
}

ylab_status ylab_grid_set_xs(ylab_grid* g, const char* csv) {
  YLAB_REQUIRE(g);
  YLAB_REQUIRE(csv);
  return guarded([&] { g->grid.xs = parse_list(csv); });
}

void ylab_grid_free(ylab_grid* g) { delete g; }

ylab_status ylab_verify_suite(const ylab_grid* g, ylab_reports** out) {
  YLAB_REQUIRE(g);
  YLAB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new ylab_reports{ylab::run_suite(g->grid)}; });
}

ylab_status ylab_verify_check(const char* check_id, const ylab_grid* g, const char* variant,
                              int strict, ylab_reports** out) {
  YLAB_REQUIRE(check_id);
  YLAB_REQUIRE(g);
  YLAB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const std::string_view v = variant ? std::string_view(variant) : std::string_view();
    auto report = strict ? ylab::run_check(check_id, g->grid, v)
                         : ylab::run_check_lenient(check_id, g->grid, v);
    *out = new ylab_reports{{std::move(report)}};
  });
}

ylab_status ylab_resolve_sign_variant(const ylab_grid* g, char** json, char** holding) {
  YLAB_REQUIRE(g);
  YLAB_REQUIRE(json);
  *json = nullptr;
  if (holding) *holding = nullptr;
  return guarded([&] {
    const auto resolution = ylab::resolve_sign_variant(g->grid);
    char* j = copy_string(ylab::sign_resolution_to_json(resolution));
    if (holding && resolution.holding_variant) {
      try {
        *holding = copy_string(*resolution.holding_variant);
      } catch (...) {
        std::free(j);
        throw;
      }
    }
    *json = j;
  });
}

size_t ylab_reports_size(const ylab_reports* r) { return r ? r->reports.size() : 0; }

int ylab_reports_all_passed(const ylab_reports* r) {
  if (!r) return 0;
  for (const auto& rep : r->reports) {
    if (!rep.passed) return 0;
  }
  return 1;
}

const char* ylab_report_check_id(const ylab_reports* r, size_t index) {
  return (r && index < r->reports.size()) ? r->reports[index].check_id.c_str() : nullptr;
}

int ylab_report_passed(const ylab_reports* r, size_t index) {
  return (r && index < r->reports.size()) ? r->reports[index].passed : 0;
}

size_t ylab_report_points_tested(const ylab_reports* r, size_t index) {
  return (r && index < r->reports.size()) ? r->reports[index].points_tested : 0;
}

ylab_status ylab_reports_to_json(const ylab_reports* r, char** out) {
  YLAB_REQUIRE(r);
  return string_result(out, [&] { return ylab::reports_to_json(r->reports); });
}

ylab_status ylab_reports_to_csv(const ylab_reports* r, char** out) {
  YLAB_REQUIRE(r);
  return string_result(out, [&] { return ylab::reports_to_csv(r->reports); });
}

void ylab_reports_free(ylab_reports* r) { delete r; }

// ---- Approximations

ylab_status ylab_stirling_factorial_approx(long n, double* out) {
  return double_result(out, [&] { return ylab::stirling_factorial_approx(n); });
}

ylab_status ylab_catalan_approx(long n, double* out) {
  return double_result(out, [&] { return ylab::catalan_approx(n); });
}

ylab_status ylab_v_approx(long n, const ylab_rational* lambda, double* out) {
  YLAB_REQUIRE(lambda);
  return double_result(out, [&] { return ylab::v_approx(n, lambda->value); });
}

ylab_status ylab_v_ratio_asymptotic(const ylab_rational* lambda, double* out) {
  YLAB_REQUIRE(lambda);
  return double_result(out, [&] { return ylab::v_ratio_asymptotic(lambda->value); });
}

ylab_status ylab_v_ratio_exact(long n, const ylab_rational* lambda, ylab_rational** out) {
  YLAB_REQUIRE(lambda);
  return rational_result(out, [&] { return ylab::v_ratio_exact(n, lambda->value); });
}

ylab_status ylab_zeta_partial_sum(const ylab_rational* lambda, long m, long k, long cutoff,
                                  double* out) {
  YLAB_REQUIRE(lambda);
  return double_result(out, [&] { return ylab::zeta_partial_sum(lambda->value, m, k, cutoff); });
}

namespace {

ylab::ZetaTarget zeta_form(int order_k_form) {
  return order_k_form ? ylab::ZetaTarget::order_k : ylab::ZetaTarget::printed;
}

}  // namespace

ylab_status ylab_zeta_target(const ylab_rational* lambda, long m, long k, int order_k_form,
                             ylab_rational** out) {
  YLAB_REQUIRE(lambda);
  return rational_result(out, [&] { return ylab::zeta_target(lambda->value, m, k, zeta_form(order_k_form)); });
}

ylab_status ylab_zeta_error(const ylab_rational* lambda, long m, long k, long cutoff,
                            int order_k_form, double* out) {
  YLAB_REQUIRE(lambda);
  return double_result(out, [&] {
    return ylab::zeta_error(lambda->value, m, k, cutoff, zeta_form(order_k_form));
  });
}

ylab_status ylab_v_approx_table(const long* ns, size_t count, const ylab_rational* lambda,
                                ylab_approx_table** out) {
  if (count > 0) YLAB_REQUIRE(ns);
  YLAB_REQUIRE(lambda);
  YLAB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    std::vector<long> list(ns, ns + count);
    *out = new ylab_approx_table{ylab::v_approx_table(list, lambda->value)};
  });
}

size_t ylab_approx_table_size(const ylab_approx_table* t) { return t ? t->records.size() : 0; }

ylab_status ylab_approx_table_row(const ylab_approx_table* t, size_t index, long* n,
                                  ylab_rational** exact, double* approx, double* rel_error) {
  YLAB_REQUIRE(t);
  if (index >= t->records.size()) return fail(YLAB_ERR_DOMAIN, "index out of range");
  const auto& rec = t->records[index];
  return guarded([&] {
    if (exact) *exact = new ylab_rational{rec.exact};
    if (n) *n = rec.n;
    if (approx) *approx = rec.approx;
    if (rel_error) *rel_error = rec.rel_error;
  });
}

ylab_status ylab_approx_table_to_json(const ylab_approx_table* t, char** out) {
  YLAB_REQUIRE(t);
  return string_result(out, [&] { return ylab::approx_table_to_json(t->records); });
}

ylab_status ylab_approx_table_to_csv(const ylab_approx_table* t, char** out) {
  YLAB_REQUIRE(t);
  return string_result(out, [&] { return ylab::approx_table_to_csv(t->records); });
}

void ylab_approx_table_free(ylab_approx_table* t) { delete t; }

}  // extern "C"
