#pragma once

#include <string>
#include <vector>

#include "ylab/approx.hpp"
#include "ylab/identities.hpp"
#include "ylab/rational.hpp"

namespace ylab {

// Serialization used by the CLI and the C API. Rationals are always "p/q"
// strings; field order is fixed so output is byte-stable.

/// JSON array of reports: check_id, variant, points_tested, passed,
/// first_counterexample ({params, lhs, rhs} or null), notices, elapsed_ms.
std::string reports_to_json(const std::vector<IdentityReport>& reports);
/// Header plus one row per report; params are "name=value" joined with ';'.
std::string reports_to_csv(const std::vector<IdentityReport>& reports);

std::string sign_resolution_to_json(const SignResolution& resolution);

/// JSON array of {n, lambda, exact, exact_float, approx, rel_error}.
std::string approx_table_to_json(const std::vector<ApproxRecord>& records);
/// Columns n, lambda, exact, approx, rel_error.
std::string approx_table_to_csv(const std::vector<ApproxRecord>& records);

/// JSON array of rational strings.
std::string values_to_json(const std::vector<Rational>& values);

/// Shortest round-tripping decimal form of a double ("inf", "-inf", "nan" otherwise).
std::string format_double(double value);

}  // namespace ylab
