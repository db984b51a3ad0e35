#include <doctest.h>

#include <json.hpp>

#include "ylab/report_io.hpp"

using namespace ylab;

TEST_SUITE("report-io") {

TEST_CASE("report JSON fields and rational round trip") {
  IdentityReport ok;
  ok.check_id = "a";
  ok.points_tested = 3;
  IdentityReport bad;
  bad.check_id = "b";
  bad.variant = "plus";
  bad.points_tested = 1;
  bad.passed = false;
  bad.first_counterexample = Counterexample{{{"lambda", "-1/2"}, {"k", "0"}}, "4/9", "-7"};
  bad.notices = {"note"};
  const auto j = nlohmann::json::parse(reports_to_json({ok, bad}));
  REQUIRE(j.size() == 2);
  CHECK(j[0]["check_id"] == "a");
  CHECK(j[0]["variant"].is_null());
  CHECK(j[0]["first_counterexample"].is_null());
  CHECK(j[0]["passed"] == true);
  CHECK(j[1]["variant"] == "plus");
  CHECK(j[1]["first_counterexample"]["params"]["lambda"] == "-1/2");
  CHECK(Rational::parse(j[1]["first_counterexample"]["lhs"].get<std::string>()) == Rational::parse("4/9"));
  CHECK(j[1]["notices"][0] == "note");
  CHECK(j[1].contains("elapsed_ms"));
}

TEST_CASE("report CSV quoting") {
  IdentityReport r;
  r.check_id = "x";
  r.passed = false;
  r.first_counterexample = Counterexample{{{"k", "[1,2]"}}, "1", "2"};
  const std::string csv = reports_to_csv({r});
  CHECK(csv.find("check_id,variant,points_tested,passed,params,lhs,rhs,notices,elapsed_ms\n") == 0);
  CHECK(csv.find("x,,0,false,\"k=[1,2]\",1,2,,") != std::string::npos);
}

TEST_CASE("approx table formats") {
  ApproxRecord rec{1, Rational(-1), Rational::parse("1/2"), 1.25, 1.5};
  const std::string csv = approx_table_to_csv({rec});
  CHECK(csv == "n,lambda,exact,approx,rel_error\n1,-1,1/2,1.25,1.5\n");
  const auto j = nlohmann::json::parse(approx_table_to_json({rec}));
  CHECK(j[0]["exact"] == "1/2");
  CHECK(j[0]["exact_float"] == 0.5);
  CHECK(j[0]["approx"] == 1.25);
}

TEST_CASE("double formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 1.7171e34, -18.2694, 0.0}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
  CHECK(format_double(INFINITY) == "inf");
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("values JSON") {
  CHECK(values_to_json({Rational(1), Rational::parse("-9/2")}) == "[\"1\",\"-9/2\"]\n");
}

}  // TEST_SUITE
