#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ylab/rational.hpp"

namespace ylab {

struct IntRange {
  long lo = 0;
  long hi = 0;
  bool empty() const { return lo > hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Points at which identities are evaluated.
///
/// `n` drives the index of the numbers, `k` the orders (also reused for the
/// component orders k_i of multi-order convolutions and for the derivative
/// shift v), `m_max` the number of factors in multi-order convolutions.
/// Lambda-free integer identities use `n` only.
struct ParameterGrid {
  IntRange n{0, 20};
  IntRange k{0, 5};
  long m_max = 3;
  std::vector<Rational> lambdas;
  std::vector<Rational> xs;

  /// n <= 20; k <= 5; lambdas {-2,-1,-1/2,1/3,2,5/2,3}; xs {0,1,-1,1/2}.
  static ParameterGrid defaults();
};

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct Counterexample {
  ParamList params;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string check_id;
  std::string variant;  // empty unless the check has variants
  std::size_t points_tested = 0;
  bool passed = true;
  std::optional<Counterexample> first_counterexample;
  std::vector<std::string> notices;
  std::chrono::duration<double, std::milli> elapsed{};
};

enum class LambdaUse {
  none,        // integer identity
  y_family,    // lambda = 1 is a pole
  euler_shift, // Y(-lambda) against E(lambda): lambda = -1 is a pole
};

struct CheckInfo {
  std::string_view id;
  std::string_view summary;
  LambdaUse lambda_use;
  std::vector<std::string_view> variants;  // first entry is the default
};

/// All executable identities in catalog order.
const std::vector<CheckInfo>& catalog();
/// Error(unknown_check) for ids not in the catalog.
const CheckInfo& find_check(std::string_view id);

/// Evaluates one identity at every grid point, stopping at the first failure.
/// Rejects grids containing a pole of the identity (Error(pole)), empty
/// ranges (Error(domain)) and unknown ids or variants.
IdentityReport run_check(std::string_view id, const ParameterGrid& grid,
                         std::string_view variant = {});

/// Like run_check, but lambdas that are poles of this identity are dropped
/// from the grid with a notice instead of rejecting it.
IdentityReport run_check_lenient(std::string_view id, const ParameterGrid& grid,
                                 std::string_view variant = {});

/// Runs every catalog entry leniently, checks in parallel; output order is
/// catalog order.
std::vector<IdentityReport> run_suite(const ParameterGrid& grid, bool parallel = true);

/// Outcome of running the sign variants of the Stirling/Apostol-Bernoulli
/// identity against each other.
struct SignResolution {
  IdentityReport plus;   // (-1)^{k+1}
  IdentityReport minus;  // (-1)^k
  /// Set only when exactly one of the two variants holds on the whole grid.
  std::optional<std::string> holding_variant;
  /// Per order k: which sign variants hold on the slice of the grid at that k.
  std::vector<std::pair<long, std::vector<std::string>>> per_order;
};

SignResolution resolve_sign_variant(const ParameterGrid& grid);

}  // namespace ylab
