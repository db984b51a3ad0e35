// Command-line front end. Talks to the library only through ylab/ylab.h.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or domain error.
// Diagnostics go to stderr as "error:<kind>: message".

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ylab/ylab.h"

namespace {

using nlohmann::ordered_json;

struct CliError {
  std::string kind;
  std::string message;
};

void check(ylab_status status) {
  if (status != YLAB_OK) throw CliError{ylab_status_name(status), ylab_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using RationalPtr = std::unique_ptr<ylab_rational, Deleter<ylab_rational, ylab_rational_free>>;
using RatfunPtr = std::unique_ptr<ylab_ratfun, Deleter<ylab_ratfun, ylab_ratfun_free>>;
using ValuesPtr = std::unique_ptr<ylab_values, Deleter<ylab_values, ylab_values_free>>;
using GridPtr = std::unique_ptr<ylab_grid, Deleter<ylab_grid, ylab_grid_free>>;
using ReportsPtr = std::unique_ptr<ylab_reports, Deleter<ylab_reports, ylab_reports_free>>;
using TablePtr = std::unique_ptr<ylab_approx_table, Deleter<ylab_approx_table, ylab_approx_table_free>>;

std::string take(char* s) {
  std::string out(s ? s : "");
  ylab_string_free(s);
  return out;
}

RationalPtr parse_rational(const std::string& text, bool allow_decimal = false) {
  ylab_rational* r = nullptr;
  check(allow_decimal ? ylab_rational_parse_decimal(text.c_str(), &r)
                      : ylab_rational_parse(text.c_str(), &r));
  return RationalPtr(r);
}

// Y-family inputs are rejected at lambda = 1 before any computation.
RationalPtr parse_lambda(const std::string& text, bool allow_decimal = false) {
  auto lambda = parse_rational(text, allow_decimal);
  auto one = parse_rational("1");
  if (ylab_rational_equal(lambda.get(), one.get())) {
    throw CliError{"pole", "lambda = 1 is a pole of the Y family"};
  }
  return lambda;
}

std::string to_string(const ylab_rational* r) {
  char* s = nullptr;
  check(ylab_rational_to_string(r, &s));
  return take(s);
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CliError{"parse", "not an integer: '" + item + "'"};
    }
  }
  return out;
}

size_t default_order() {
  const char* env = std::getenv("YLAB_DEFAULT_ORDER");
  if (!env || !*env) return 16;
  try {
    size_t used = 0;
    const long v = std::stol(env, &used);
    if (used == std::string(env).size() && v >= 0) return static_cast<size_t>(v);
  } catch (const std::exception&) {
  }
  throw CliError{"usage", std::string("YLAB_DEFAULT_ORDER must be a nonnegative integer, got '") + env + "'"};
}

void print_value(const ylab_rational* r, bool raw) {
  const std::string s = to_string(r);
  if (raw) {
    std::cout << s << "\n";
  } else {
    std::cout << ordered_json{{"value", s}}.dump() << "\n";
  }
}

void print_double(const char* key, double v, bool raw) {
  if (raw) {
    std::cout << ordered_json(v).dump() << "\n";
  } else {
    std::cout << ordered_json{{key, v}}.dump() << "\n";
  }
}

void require_format(const std::string& format) {
  if (format != "json" && format != "csv") throw CliError{"usage", "format must be json or csv"};
}

struct Options {
  // compute / series / table
  long n = 0, k = 1, m = 0, n_max = 3;
  std::string lambda, x = "0";
  bool raw = false, symbolic = false;
  std::optional<size_t> order;
  // verify
  std::string suite = "all", lambdas = "-2,-1,-1/2,1/3,2,5/2,3", xs = "0,1,-1,1/2", variant;
  long n_min = 0, verify_n_max = 20, k_min = 0, k_max = 5, m_max = 3;
  bool list = false, strict = false, resolve_sign = false;
  std::string format = "json";
  // approx
  std::string n_list = "1,5,10,125";
  long cutoff = 200;
  std::string zeta_target = "printed";
};

int run_verify(const Options& o) {
  require_format(o.format);
  if (o.list) {
    for (size_t i = 0; i < ylab_check_count(); ++i) {
      std::cout << ylab_check_id(i);
      const size_t variants = ylab_check_variant_count(i);
      if (variants > 0) {
        std::cout << " [";
        for (size_t v = 0; v < variants; ++v) std::cout << (v ? "," : "") << ylab_check_variant(i, v);
        std::cout << "]";
      }
      std::cout << "  " << ylab_check_summary(i) << "\n";
    }
    return 0;
  }
  ylab_grid* raw_grid = nullptr;
  check(ylab_grid_new(&raw_grid));
  GridPtr grid(raw_grid);
  check(ylab_grid_set_n(grid.get(), o.n_min, o.verify_n_max));
  check(ylab_grid_set_k(grid.get(), o.k_min, o.k_max));
  check(ylab_grid_set_m_max(grid.get(), o.m_max));
  check(ylab_grid_set_lambdas(grid.get(), o.lambdas.c_str()));
  check(ylab_grid_set_xs(grid.get(), o.xs.c_str()));

  if (o.resolve_sign) {
    char* json = nullptr;
    char* holding = nullptr;
    check(ylab_resolve_sign_variant(grid.get(), &json, &holding));
    const bool resolved = holding != nullptr;
    ylab_string_free(holding);
    std::cout << take(json);
    return resolved ? 0 : 1;
  }

  ylab_reports* raw_reports = nullptr;
  if (o.suite == "all") {
    if (!o.variant.empty()) throw CliError{"usage", "--variant needs a single check in --suite"};
    check(ylab_verify_suite(grid.get(), &raw_reports));
  } else {
    check(ylab_verify_check(o.suite.c_str(), grid.get(), o.variant.c_str(), o.strict ? 1 : 0, &raw_reports));
  }
  ReportsPtr reports(raw_reports);
  char* text = nullptr;
  check(o.format == "csv" ? ylab_reports_to_csv(reports.get(), &text)
                          : ylab_reports_to_json(reports.get(), &text));
  std::cout << take(text);
  return ylab_reports_all_passed(reports.get()) ? 0 : 1;
}

void print_values(ylab_values* raw) {
  ValuesPtr values(raw);
  char* text = nullptr;
  check(ylab_values_to_json(values.get(), &text));
  std::cout << take(text);
}

void print_approx_table(const Options& o) {
  require_format(o.format);
  const auto ns = parse_long_list(o.n_list);
  auto lambda = parse_lambda(o.lambda);
  ylab_approx_table* raw = nullptr;
  check(ylab_v_approx_table(ns.data(), ns.size(), lambda.get(), &raw));
  TablePtr table(raw);
  char* text = nullptr;
  check(o.format == "csv" ? ylab_approx_table_to_csv(table.get(), &text)
                          : ylab_approx_table_to_json(table.get(), &text));
  std::cout << take(text);
}

void print_y_table(const Options& o) {
  require_format(o.format);
  if (o.n_max < 0) throw CliError{"domain", "--n-max must be nonnegative"};
  if (o.symbolic == !o.lambda.empty()) throw CliError{"usage", "table y needs exactly one of --symbolic or --lambda"};
  RationalPtr lambda;
  if (!o.symbolic) lambda = parse_lambda(o.lambda);
  ordered_json rows = ordered_json::array();
  std::ostringstream csv;
  csv << (o.symbolic ? "n,k,expanded,factored\n" : "n,k,lambda,value\n");
  for (long n = 0; n <= o.n_max; ++n) {
    ordered_json row{{"n", n}, {"k", o.k}};
    if (o.symbolic) {
      ylab_ratfun* raw = nullptr;
      check(ylab_y_number_ratfun(n, o.k, &raw));
      RatfunPtr f(raw);
      char* expanded = nullptr;
      char* factored = nullptr;
      check(ylab_ratfun_to_string(f.get(), 0, &expanded));
      const std::string e = take(expanded);
      check(ylab_ratfun_to_string(f.get(), 1, &factored));
      const std::string fac = take(factored);
      row["expanded"] = e;
      row["factored"] = fac;
      csv << n << ',' << o.k << ",\"" << e << "\",\"" << fac << "\"\n";
    } else {
      ylab_rational* raw = nullptr;
      check(ylab_y_number(n, o.k, lambda.get(), &raw));
      RationalPtr v(raw);
      const std::string lam = to_string(lambda.get());
      const std::string value = to_string(v.get());
      row["lambda"] = lam;
      row["value"] = value;
      csv << n << ',' << o.k << ',' << lam << ',' << value << '\n';
    }
    rows.push_back(std::move(row));
  }
  if (o.format == "csv") {
    std::cout << csv.str();
  } else {
    std::cout << rows.dump(2) << "\n";
  }
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Exact computation and identity verification for the Y_n^(k)(lambda) number family"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ylab_version()));
  Options o;

  auto add_lambda = [&](CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--lambda", o.lambda, "lambda as p/q");
    if (required) opt->required();
  };

  // compute
  auto* compute = app.add_subcommand("compute", "exact values");
  compute->require_subcommand(1);
  compute->add_flag("--raw", o.raw, "print the bare value");
  auto* c_y = compute->add_subcommand("y", "Y_n^(k)(lambda)");
  auto* c_ypoly = compute->add_subcommand("ypoly", "Y_n^(k)(x;lambda)");
  auto* c_ab = compute->add_subcommand("ab", "Apostol-Bernoulli B_n^(k)(lambda)");
  auto* c_ae = compute->add_subcommand("ae", "Apostol-Euler E_n^(k)(lambda)");
  auto* c_s1 = compute->add_subcommand("s1", "Stirling numbers of the first kind S_1(n,m)");
  auto* c_cat = compute->add_subcommand("catalan", "Catalan number C_n");
  auto* c_v = compute->add_subcommand("v", "V_n(lambda) = Y_n^(n+1)(lambda)/(n+1)!");
  for (auto* cmd : {c_y, c_ypoly, c_ab, c_ae, c_s1, c_cat, c_v}) {
    cmd->add_option("--n", o.n, "index")->required();
    cmd->add_flag("--raw", o.raw, "print the bare value");
  }
  for (auto* cmd : {c_y, c_ypoly, c_ab, c_ae}) cmd->add_option("--k", o.k, "order")->required();
  for (auto* cmd : {c_y, c_ypoly, c_ab, c_ae, c_v}) add_lambda(cmd);
  c_ypoly->add_option("--x", o.x, "x as p/q")->required();
  c_s1->add_option("--m", o.m, "column")->required();

  // series
  auto* series = app.add_subcommand("series", "generating-function expansions (n! [t^n])");
  series->require_subcommand(1);
  auto* s_y = series->add_subcommand("y", "(2/(lambda(1+lambda t)-1))^k");
  auto* s_ypoly = series->add_subcommand("ypoly", "the above times (1+lambda t)^x");
  auto* s_s1 = series->add_subcommand("s1", "log(1+t)^k/k!");
  auto* s_ab = series->add_subcommand("ab", "(t/(lambda e^t-1))^k");
  auto* s_ae = series->add_subcommand("ae", "(2/(lambda e^t+1))^k");
  for (auto* cmd : {s_y, s_ypoly, s_s1, s_ab, s_ae}) {
    cmd->add_option("--k", o.k, "order")->required();
    cmd->add_option("--order", o.order, "number of coefficients (default 16 or $YLAB_DEFAULT_ORDER)");
  }
  for (auto* cmd : {s_y, s_ypoly, s_ab, s_ae}) add_lambda(cmd);
  s_ypoly->add_option("--x", o.x, "x as p/q")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "check identities over a parameter grid");
  verify->add_option("--suite", o.suite, "all or a check id");
  verify->add_option("--n-min", o.n_min, "lowest n");
  verify->add_option("--n-max", o.verify_n_max, "highest n");
  verify->add_option("--k-min", o.k_min, "lowest order");
  verify->add_option("--k-max", o.k_max, "highest order");
  verify->add_option("--m-max", o.m_max, "most factors in multi-order convolutions");
  verify->add_option("--lambdas", o.lambdas, "comma-separated rationals; empty for none");
  verify->add_option("--xs", o.xs, "comma-separated rationals for polynomial checks");
  verify->add_option("--variant", o.variant, "variant of a single check");
  verify->add_option("--format", o.format, "json or csv");
  verify->add_flag("--strict", o.strict, "reject a grid containing a pole instead of skipping it");
  verify->add_flag("--resolve-sign", o.resolve_sign, "run both sign variants of s1-apostol-bernoulli");
  verify->add_flag("--list", o.list, "list the catalog");

  // approx
  auto* approx = app.add_subcommand("approx", "leading-order approximations");
  approx->require_subcommand(1);
  approx->add_flag("--raw", o.raw, "print the bare value");
  auto* a_vn = approx->add_subcommand("vn", "approximate V_n(lambda)");
  a_vn->add_option("--n", o.n, "index")->required();
  add_lambda(a_vn);
  auto* a_table = approx->add_subcommand("table", "exact V_n against the approximation");
  a_table->add_option("--n-list", o.n_list, "comma-separated n");
  add_lambda(a_table);
  a_table->add_option("--format", o.format, "json or csv");
  auto* a_stirling = approx->add_subcommand("stirling", "(n/e)^n sqrt(2 pi n)");
  a_stirling->add_option("--n", o.n, "index")->required();
  auto* a_catalan = approx->add_subcommand("catalan", "4^n/(n sqrt(n pi))");
  a_catalan->add_option("--n", o.n, "index")->required();
  auto* a_ratio = approx->add_subcommand("ratio", "V_{n+1}/V_n, exact with --n, limit otherwise");
  add_lambda(a_ratio);
  std::optional<long> ratio_n;
  a_ratio->add_option("--n", ratio_n, "index for the exact ratio");
  auto* a_zeta = approx->add_subcommand("zeta", "sum_{j<=N} C(j+k-1,j) lambda^j j^m");
  add_lambda(a_zeta);
  a_zeta->add_option("--m", o.m, "power of j")->required();
  a_zeta->add_option("--k", o.k, "order")->required();
  a_zeta->add_option("--cutoff", o.cutoff, "N");
  a_zeta->add_option("--target", o.zeta_target, "printed: -B_{m+1}^(k)/(m+1); order-k: (-1)^k m! B_{m+k}^(k)/(m+k)!");
  for (auto* cmd : {a_vn, a_stirling, a_catalan, a_ratio, a_zeta}) {
    cmd->add_flag("--raw", o.raw, "print the bare value");
  }

  // table
  auto* table = app.add_subcommand("table", "value tables");
  table->require_subcommand(1);
  auto* t_y = table->add_subcommand("y", "Y_n^(k) for n = 0..n-max");
  t_y->add_option("--n-max", o.n_max, "highest n")->required();
  t_y->add_option("--k", o.k, "order")->required();
  t_y->add_flag("--symbolic", o.symbolic, "rational functions of lambda");
  add_lambda(t_y, false);
  t_y->add_option("--format", o.format, "json or csv");
  auto* t_v = table->add_subcommand("approx-v", "same as approx table");
  add_lambda(t_v);
  t_v->add_option("--n-list", o.n_list, "comma-separated n");
  t_v->add_option("--format", o.format, "json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    throw CliError{"usage", e.what()};
  }

  ylab_rational* raw = nullptr;
  if (c_y->parsed()) {
    auto lambda = parse_lambda(o.lambda);
    check(ylab_y_number(o.n, o.k, lambda.get(), &raw));
  } else if (c_ypoly->parsed()) {
    auto lambda = parse_lambda(o.lambda);
    auto x = parse_rational(o.x);
    check(ylab_y_polynomial(o.n, o.k, x.get(), lambda.get(), &raw));
  } else if (c_ab->parsed()) {
    auto lambda = parse_rational(o.lambda);
    check(ylab_apostol_bernoulli(o.n, o.k, lambda.get(), &raw));
  } else if (c_ae->parsed()) {
    auto lambda = parse_rational(o.lambda);
    check(ylab_apostol_euler(o.n, o.k, lambda.get(), &raw));
  } else if (c_s1->parsed()) {
    check(ylab_stirling1(o.n, o.m, &raw));
  } else if (c_cat->parsed()) {
    check(ylab_catalan(o.n, &raw));
  } else if (c_v->parsed()) {
    auto lambda = parse_lambda(o.lambda);
    check(ylab_v_number(o.n, lambda.get(), &raw));
  }
  if (compute->parsed()) {
    RationalPtr value(raw);
    print_value(value.get(), o.raw);
    return 0;
  }

  if (series->parsed()) {
    const size_t order = o.order ? *o.order : default_order();
    ylab_values* values = nullptr;
    if (s_y->parsed()) {
      auto lambda = parse_lambda(o.lambda);
      check(ylab_series_y(o.k, lambda.get(), order, &values));
    } else if (s_ypoly->parsed()) {
      auto lambda = parse_lambda(o.lambda);
      auto x = parse_rational(o.x);
      check(ylab_series_ypoly(o.k, x.get(), lambda.get(), order, &values));
    } else if (s_s1->parsed()) {
      check(ylab_series_stirling1(o.k, order, &values));
    } else {
      auto lambda = parse_rational(o.lambda);
      check(ylab_series_apostol(s_ae->parsed() ? YLAB_APOSTOL_EULER : YLAB_APOSTOL_BERNOULLI, o.k,
                                lambda.get(), order, &values));
    }
    print_values(values);
    return 0;
  }

  if (verify->parsed()) return run_verify(o);

  if (approx->parsed()) {
    double value = 0.0;
    if (a_vn->parsed()) {
      auto lambda = parse_lambda(o.lambda, true);
      check(ylab_v_approx(o.n, lambda.get(), &value));
      print_double("approx", value, o.raw);
    } else if (a_table->parsed()) {
      print_approx_table(o);
    } else if (a_stirling->parsed()) {
      check(ylab_stirling_factorial_approx(o.n, &value));
      print_double("approx", value, o.raw);
    } else if (a_catalan->parsed()) {
      check(ylab_catalan_approx(o.n, &value));
      print_double("approx", value, o.raw);
    } else if (a_ratio->parsed()) {
      auto lambda = parse_lambda(o.lambda, true);
      if (ratio_n) {
        ylab_rational* r = nullptr;
        check(ylab_v_ratio_exact(*ratio_n, lambda.get(), &r));
        RationalPtr ratio(r);
        print_value(ratio.get(), o.raw);
      } else {
        check(ylab_v_ratio_asymptotic(lambda.get(), &value));
        print_double("ratio", value, o.raw);
      }
    } else if (a_zeta->parsed()) {
      if (o.zeta_target != "printed" && o.zeta_target != "order-k") {
        throw CliError{"usage", "--target must be printed or order-k"};
      }
      const int form = o.zeta_target == "order-k" ? 1 : 0;
      auto lambda = parse_rational(o.lambda, true);
      check(ylab_zeta_partial_sum(lambda.get(), o.m, o.k, o.cutoff, &value));
      if (o.raw) {
        print_double("sum", value, true);
      } else {
        ylab_rational* t = nullptr;
        check(ylab_zeta_target(lambda.get(), o.m, o.k, form, &t));
        RationalPtr target(t);
        double error = 0.0;
        check(ylab_zeta_error(lambda.get(), o.m, o.k, o.cutoff, form, &error));
        std::cout << ordered_json{{"sum", value}, {"target", to_string(target.get())}, {"error", error}}.dump()
                  << "\n";
      }
    }
    return 0;
  }

  if (t_y->parsed()) {
    print_y_table(o);
  } else if (t_v->parsed()) {
    print_approx_table(o);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error:" << e.kind << ": " << e.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error:internal: " << e.what() << "\n";
    return 2;
  }
}
