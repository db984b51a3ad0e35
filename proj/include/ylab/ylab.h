#ifndef YLAB_YLAB_H
#define YLAB_YLAB_H

/*
 * C interface to the ylab library.
 *
 * Every fallible call returns a ylab_status; on failure a description is
 * available from ylab_last_error() on the calling thread. Objects are opaque
 * handles released with their matching *_free function. Strings returned
 * through char** out-parameters are owned by the caller and released with
 * ylab_string_free. Rationals cross the boundary as handles or "p/q" strings.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(YLAB_BUILDING_LIBRARY)
#    define YLAB_API __declspec(dllexport)
#  else
#    define YLAB_API __declspec(dllimport)
#  endif
#else
#  define YLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ylab_status {
  YLAB_OK = 0,
  YLAB_ERR_POLE = 1,
  YLAB_ERR_DOMAIN = 2,
  YLAB_ERR_PARSE = 3,
  YLAB_ERR_NON_INVERTIBLE = 4,
  YLAB_ERR_ORDER_MISMATCH = 5,
  YLAB_ERR_UNKNOWN_CHECK = 6,
  YLAB_ERR_USAGE = 7,
  YLAB_ERR_NULL_ARGUMENT = 8,
  YLAB_ERR_INTERNAL = 9
} ylab_status;

/* "ok", "pole", "domain", "parse", "non-invertible", "order-mismatch",
   "unknown-check", "usage", "null-argument", "internal". */
YLAB_API const char* ylab_status_name(ylab_status status);
/* Message of the last failed call on this thread; "" if none. */
YLAB_API const char* ylab_last_error(void);
YLAB_API void ylab_string_free(char* s);
YLAB_API const char* ylab_version(void);

/* ---- Rationals ---- */

typedef struct ylab_rational ylab_rational;

/* Accepts "p", "p/q" with an optional sign. */
YLAB_API ylab_status ylab_rational_parse(const char* text, ylab_rational** out);
/* Also accepts finite decimals such as "-0.25". */
YLAB_API ylab_status ylab_rational_parse_decimal(const char* text, ylab_rational** out);
YLAB_API ylab_status ylab_rational_to_string(const ylab_rational* r, char** out);
YLAB_API double ylab_rational_to_double(const ylab_rational* r);
YLAB_API int ylab_rational_equal(const ylab_rational* a, const ylab_rational* b);
YLAB_API void ylab_rational_free(ylab_rational* r);

YLAB_API ylab_status ylab_binomial(long n, long j, ylab_rational** out);
YLAB_API ylab_status ylab_factorial(long n, ylab_rational** out);

/* ---- Number families (all exact) ---- */

YLAB_API ylab_status ylab_y_number(long n, long k, const ylab_rational* lambda, ylab_rational** out);
YLAB_API ylab_status ylab_y_number_recurrence(long n, long k, const ylab_rational* lambda,
                                              ylab_rational** out);
YLAB_API ylab_status ylab_y_polynomial(long n, long k, const ylab_rational* x,
                                       const ylab_rational* lambda, ylab_rational** out);
YLAB_API ylab_status ylab_stirling1(long n, long m, ylab_rational** out);
YLAB_API ylab_status ylab_apostol_bernoulli(long n, long k, const ylab_rational* lambda,
                                            ylab_rational** out);
YLAB_API ylab_status ylab_apostol_euler(long n, long k, const ylab_rational* lambda,
                                        ylab_rational** out);
YLAB_API ylab_status ylab_catalan(long n, ylab_rational** out);
YLAB_API ylab_status ylab_bernstein(long j, long k, const ylab_rational* lambda, ylab_rational** out);
YLAB_API ylab_status ylab_v_number(long n, const ylab_rational* lambda, ylab_rational** out);

/* ---- Rational functions of lambda ---- */

typedef struct ylab_ratfun ylab_ratfun;

YLAB_API ylab_status ylab_y_number_ratfun(long n, long k, ylab_ratfun** out);
YLAB_API ylab_status ylab_ratfun_derivative(const ylab_ratfun* f, ylab_ratfun** out);
YLAB_API ylab_status ylab_ratfun_eval(const ylab_ratfun* f, const ylab_rational* at,
                                      ylab_rational** out);
/* factored != 0 renders a denominator (l-1)^p in factored form. */
YLAB_API ylab_status ylab_ratfun_to_string(const ylab_ratfun* f, int factored, char** out);
YLAB_API int ylab_ratfun_equal(const ylab_ratfun* a, const ylab_ratfun* b);
YLAB_API void ylab_ratfun_free(ylab_ratfun* f);

/* ---- Value lists and series expansions ---- */

typedef struct ylab_values ylab_values;

typedef enum ylab_apostol_kind { YLAB_APOSTOL_BERNOULLI = 0, YLAB_APOSTOL_EULER = 1 } ylab_apostol_kind;

/* n! times the coefficient of t^n for n < order. */
YLAB_API ylab_status ylab_series_y(long k, const ylab_rational* lambda, size_t order, ylab_values** out);
YLAB_API ylab_status ylab_series_ypoly(long k, const ylab_rational* x, const ylab_rational* lambda,
                                       size_t order, ylab_values** out);
YLAB_API ylab_status ylab_series_stirling1(long k, size_t order, ylab_values** out);
YLAB_API ylab_status ylab_series_apostol(ylab_apostol_kind kind, long k, const ylab_rational* lambda,
                                         size_t order, ylab_values** out);

YLAB_API size_t ylab_values_size(const ylab_values* v);
YLAB_API ylab_status ylab_values_get(const ylab_values* v, size_t index, ylab_rational** out);
/* JSON array of "p/q" strings. */
YLAB_API ylab_status ylab_values_to_json(const ylab_values* v, char** out);
YLAB_API void ylab_values_free(ylab_values* v);

/* ---- Identity verification ---- */

typedef struct ylab_grid ylab_grid;
typedef struct ylab_reports ylab_reports;

YLAB_API size_t ylab_check_count(void);
/* NULL when index is out of range. The returned strings are static. */
YLAB_API const char* ylab_check_id(size_t index);
YLAB_API const char* ylab_check_summary(size_t index);
YLAB_API size_t ylab_check_variant_count(size_t index);
YLAB_API const char* ylab_check_variant(size_t index, size_t variant);

/* Default grid: n 0..20, k 0..5, m_max 3, lambdas {-2,-1,-1/2,1/3,2,5/2,3}, xs {0,1,-1,1/2}. */
YLAB_API ylab_status ylab_grid_new(ylab_grid** out);
YLAB_API ylab_status ylab_grid_set_n(ylab_grid* g, long lo, long hi);
YLAB_API ylab_status ylab_grid_set_k(ylab_grid* g, long lo, long hi);
YLAB_API ylab_status ylab_grid_set_m_max(ylab_grid* g, long m_max);
/* Comma-separated rationals; "" clears the list. */
YLAB_API ylab_status ylab_grid_set_lambdas(ylab_grid* g, const char* csv);
YLAB_API ylab_status ylab_grid_set_xs(ylab_grid* g, const char* csv);
YLAB_API void ylab_grid_free(ylab_grid* g);

/* Every catalog check in catalog order; pole lambdas are dropped per check with a notice. */
YLAB_API ylab_status ylab_verify_suite(const ylab_grid* g, ylab_reports** out);
/* variant may be NULL or "" for the default. strict != 0 rejects grids containing a pole. */
YLAB_API ylab_status ylab_verify_check(const char* check_id, const ylab_grid* g, const char* variant,
                                       int strict, ylab_reports** out);
/* JSON object naming the sign variant of s1-apostol-bernoulli that holds on the
   grid; *holding receives "plus", "minus" or NULL when not exactly one holds.
   holding may be NULL. */
YLAB_API ylab_status ylab_resolve_sign_variant(const ylab_grid* g, char** json, char** holding);

YLAB_API size_t ylab_reports_size(const ylab_reports* r);
YLAB_API int ylab_reports_all_passed(const ylab_reports* r);
YLAB_API const char* ylab_report_check_id(const ylab_reports* r, size_t index);
YLAB_API int ylab_report_passed(const ylab_reports* r, size_t index);
YLAB_API size_t ylab_report_points_tested(const ylab_reports* r, size_t index);
YLAB_API ylab_status ylab_reports_to_json(const ylab_reports* r, char** out);
YLAB_API ylab_status ylab_reports_to_csv(const ylab_reports* r, char** out);
YLAB_API void ylab_reports_free(ylab_reports* r);

/* ---- Approximations (double precision) ---- */

typedef struct ylab_approx_table ylab_approx_table;

YLAB_API ylab_status ylab_stirling_factorial_approx(long n, double* out);
YLAB_API ylab_status ylab_catalan_approx(long n, double* out);
YLAB_API ylab_status ylab_v_approx(long n, const ylab_rational* lambda, double* out);
YLAB_API ylab_status ylab_v_ratio_asymptotic(const ylab_rational* lambda, double* out);
YLAB_API ylab_status ylab_v_ratio_exact(long n, const ylab_rational* lambda, ylab_rational** out);
/* sum_{j=0}^{cutoff} C(j+k-1,j) lambda^j j^m, summed exactly then rounded; needs |lambda| < 1. */
YLAB_API ylab_status ylab_zeta_partial_sum(const ylab_rational* lambda, long m, long k, long cutoff,
                                           double* out);
/* Claimed limit of the sums: order_k_form == 0 gives -B_{m+1}^(k)(lambda)/(m+1),
   otherwise (-1)^k m! B_{m+k}^(k)(lambda)/(m+k)!. */
YLAB_API ylab_status ylab_zeta_target(const ylab_rational* lambda, long m, long k, int order_k_form,
                                      ylab_rational** out);
/* |partial sum - target|, computed exactly and then rounded. */
YLAB_API ylab_status ylab_zeta_error(const ylab_rational* lambda, long m, long k, long cutoff,
                                     int order_k_form, double* out);

YLAB_API ylab_status ylab_v_approx_table(const long* ns, size_t count, const ylab_rational* lambda,
                                         ylab_approx_table** out);
YLAB_API size_t ylab_approx_table_size(const ylab_approx_table* t);
/* Any output pointer may be NULL. */
YLAB_API ylab_status ylab_approx_table_row(const ylab_approx_table* t, size_t index, long* n,
                                           ylab_rational** exact, double* approx, double* rel_error);
YLAB_API ylab_status ylab_approx_table_to_json(const ylab_approx_table* t, char** out);
YLAB_API ylab_status ylab_approx_table_to_csv(const ylab_approx_table* t, char** out);
YLAB_API void ylab_approx_table_free(ylab_approx_table* t);

#ifdef __cplusplus
}
#endif

#endif /* YLAB_YLAB_H */
