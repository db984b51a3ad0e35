#include "ylab/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ylab {

using nlohmann::ordered_json;

namespace {

ordered_json report_json(const IdentityReport& r) {
  ordered_json j;
  j["check_id"] = r.check_id;
  j["variant"] = r.variant.empty() ? ordered_json(nullptr) : ordered_json(r.variant);
  j["points_tested"] = r.points_tested;
  j["passed"] = r.passed;
  if (r.first_counterexample) {
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : r.first_counterexample->params) params[name] = value;
    j["first_counterexample"] = {{"params", params},
                                 {"lhs", r.first_counterexample->lhs},
                                 {"rhs", r.first_counterexample->rhs}};
  } else {
    j["first_counterexample"] = nullptr;
  }
  j["notices"] = r.notices;
  j["elapsed_ms"] = r.elapsed.count();
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json double_json(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

std::string reports_to_json(const std::vector<IdentityReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<IdentityReport>& reports) {
  std::ostringstream out;
  out << "check_id,variant,points_tested,passed,params,lhs,rhs,notices,elapsed_ms\n";
  for (const auto& r : reports) {
    std::string params, lhs, rhs;
    if (r.first_counterexample) {
      for (const auto& [name, value] : r.first_counterexample->params) {
        if (!params.empty()) params += ';';
        params += name + "=" + value;
      }
      lhs = r.first_counterexample->lhs;
      rhs = r.first_counterexample->rhs;
    }
    std::string notices;
    for (const auto& n : r.notices) {
      if (!notices.empty()) notices += " | ";
      notices += n;
    }
    out << csv_field(r.check_id) << ',' << csv_field(r.variant) << ',' << r.points_tested << ','
        << (r.passed ? "true" : "false") << ',' << csv_field(params) << ',' << csv_field(lhs) << ','
        << csv_field(rhs) << ',' << csv_field(notices) << ',' << format_double(r.elapsed.count())
        << '\n';
  }
  return out.str();
}

std::string sign_resolution_to_json(const SignResolution& s) {
  ordered_json j;
  j["holding_variant"] = s.holding_variant ? ordered_json(*s.holding_variant) : ordered_json(nullptr);
  ordered_json per_order = ordered_json::array();
  for (const auto& [k, variants] : s.per_order) per_order.push_back({{"k", k}, {"holding", variants}});
  j["per_order"] = per_order;
  j["reports"] = ordered_json::array({report_json(s.plus), report_json(s.minus)});
  return j.dump(2) + "\n";
}

std::string approx_table_to_json(const std::vector<ApproxRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) {
    ordered_json j;
    j["n"] = r.n;
    j["lambda"] = r.lambda.to_string();
    j["exact"] = r.exact.to_string();
    j["exact_float"] = double_json(r.exact.to_double());
    j["approx"] = double_json(r.approx);
    j["rel_error"] = double_json(r.rel_error);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string approx_table_to_csv(const std::vector<ApproxRecord>& records) {
  std::ostringstream out;
  out << "n,lambda,exact,approx,rel_error\n";
  for (const auto& r : records) {
    out << r.n << ',' << r.lambda.to_string() << ',' << r.exact.to_string() << ','
        << format_double(r.approx) << ',' << format_double(r.rel_error) << '\n';
  }
  return out.str();
}

std::string values_to_json(const std::vector<Rational>& values) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr.dump() + "\n";
}

}  // namespace ylab
