#pragma once

#include <optional>
#include <string>
#include <vector>

#include "growth/cayley.hpp"

namespace growth {

struct Window {
  int kmin = 0;
  int kmax = 0;
};

struct RateThresholds {
  double exponential_ratio = 1.2;  // sphere ratio separating the two regimes
  int persistence = 5;             // trailing window ratios that must agree
};

/// u_k = gamma(k)^(1/k) for k = 1..radius. Each is an upper bound for omega(G,S).
std::vector<double> root_bounds(const GrowthTable& t);

/// sigma(k+1)/sigma(k) for k = 1..radius-1. Heuristic only.
/// Throws DegenerateSphere when a denominator sphere is empty.
std::vector<double> ratio_estimates(const GrowthTable& t);

enum class Verdict { polynomial, exponential, inconclusive };
std::string to_string(Verdict v);

struct DegreeEstimate {
  double loglog_slope = 0;     // least squares of log gamma against log k
  double doubling_degree = 0;  // log2(gamma(2k)/gamma(k)); NaN if no k fits
  int doubling_k = 0;
  Verdict verdict = Verdict::inconclusive;
  int degree = 0;  // rounded, meaningful for polynomial verdicts
};

/// Window must lie in the table with kmin >= 2 and hold at least 4 points.
DegreeEstimate poly_degree(const GrowthTable& t, Window w, RateThresholds th = {});

/// exp of the least-squares slope of log gamma(k) against k.
/// Throws FitRejected when the window verdict is polynomial.
double extrapolate_rate(const GrowthTable& t, Window w, RateThresholds th = {});

/// Natural log; DomainError for omega < 1.
double entropy_of(double omega);

struct RateEstimates {
  std::vector<double> root_bounds;
  std::vector<double> ratios;
  std::optional<int> degenerate_at;  // first k with sigma(k) = 0, if any
  double inf_root = 1;
  double entropy = 0;
  std::optional<Window> window;
  std::optional<DegreeEstimate> degree;
  std::optional<double> extrapolated_rate;
  std::vector<std::string> notes;
};

/// Default window: [max(2, radius/2), radius] when it holds at least 4 points.
std::optional<Window> default_window(const GrowthTable& t);

RateEstimates estimate_rates(const GrowthTable& t, std::optional<Window> w = std::nullopt, RateThresholds th = {});

}  // namespace growth
