#pragma once

#include <string>

#include "json.hpp"

#include "growth/bounds.hpp"
#include "growth/cayley.hpp"
#include "growth/manifold.hpp"
#include "growth/rates.hpp"

namespace growth {

/// Header `k,gamma,sigma,root_bound,ratio`. Undefined cells are left empty:
/// root_bound at k = 0, ratio where sigma(k) = 0 or sigma(k+1) is not in the table.
std::string growth_csv(const GrowthTable& t);

nlohmann::json to_json(const GrowthTable& t);
nlohmann::json to_json(const RateEstimates& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const SearchReport& r, const Group& g);
nlohmann::json to_json(const UniversalReport& u);

/// Header `det,trace,a,b,c,d,lambda_exact,lambda_float,osin_bound`.
std::string scan_csv(const ScanReport& s);
nlohmann::json scan_summary_json(const ScanReport& s);

/// Lower bounds that hold for the group of `spec` (hypotheses already met).
std::vector<BoundReport> applicable_bounds(const GroupSpec& spec);

inline constexpr double kVerifyMargin = 1e-9;

struct VerifyOutcome {
  bool pass = true;
  nlohmann::json report;
};

/// Passes unless some u_k < bound - margin for a bound carrying a value.
VerifyOutcome verify_table(const GrowthTable& t, const std::vector<BoundReport>& bounds,
                           double margin = kVerifyMargin);

/// {"constants": [{"n": 3, "a": 1, "c": 0.05}, ...]}
BCGConstantTable bcg_table_from_json(const nlohmann::json& j);

}  // namespace growth
