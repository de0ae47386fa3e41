#include "growth/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "growth/errors.hpp"
#include "growth/numeric.hpp"

namespace growth {

namespace {

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / n, my = sy / n;
  double num = 0, den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

void check_window(const GrowthTable& t, Window w, int min_kmin) {
  if (w.kmin < min_kmin || w.kmax > t.radius() || w.kmin > w.kmax) {
    throw PreconditionViolation("window [" + std::to_string(w.kmin) + "," + std::to_string(w.kmax) +
                                "] outside table radius " + std::to_string(t.radius()));
  }
  if (w.kmax - w.kmin + 1 < 4) throw WindowTooSmall("window needs at least 4 points");
}

double sphere_ratio(const GrowthTable& t, int k) {
  const auto num = static_cast<double>(t.sigma[static_cast<std::size_t>(k + 1)]);
  const auto den = static_cast<double>(t.sigma[static_cast<std::size_t>(k)]);
  return den == 0 ? 0.0 : num / den;
}

Verdict window_verdict(const GrowthTable& t, Window w, RateThresholds th) {
  const int last = w.kmax - 1;
  const int first = std::max(w.kmin, last - th.persistence + 1);
  int above = 0, total = 0;
  for (int k = first; k <= last; ++k) {
    ++total;
    if (sphere_ratio(t, k) >= th.exponential_ratio) ++above;
  }
  if (total == 0) return Verdict::inconclusive;
  if (above == total) return Verdict::exponential;
  if (above == 0) return Verdict::polynomial;
  return Verdict::inconclusive;
}

}  // namespace

std::vector<double> root_bounds(const GrowthTable& t) {
  std::vector<double> out;
  for (int k = 1; k <= t.radius(); ++k) out.push_back(kth_root(t.gamma[static_cast<std::size_t>(k)], k));
  return out;
}

std::vector<double> ratio_estimates(const GrowthTable& t) {
  std::vector<double> out;
  for (int k = 1; k + 1 <= t.radius(); ++k) {
    if (t.sigma[static_cast<std::size_t>(k)] == 0) {
      throw DegenerateSphere("sphere " + std::to_string(k) + " is empty: the group is exhausted");
    }
    out.push_back(sphere_ratio(t, k));
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::polynomial:
      return "polynomial";
    case Verdict::exponential:
      return "exponential";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

DegreeEstimate poly_degree(const GrowthTable& t, Window w, RateThresholds th) {
  check_window(t, w, 2);
  DegreeEstimate d;
  std::vector<double> xs, ys;
  for (int k = w.kmin; k <= w.kmax; ++k) {
    xs.push_back(std::log(static_cast<double>(k)));
    ys.push_back(std::log(static_cast<double>(t.gamma[static_cast<std::size_t>(k)])));
  }
  d.loglog_slope = least_squares_slope(xs, ys);

  d.doubling_degree = std::numeric_limits<double>::quiet_NaN();
  for (int k = w.kmax / 2; k >= w.kmin; --k) {
    if (2 * k <= w.kmax) {
      d.doubling_k = k;
      d.doubling_degree = std::log2(static_cast<double>(t.gamma[static_cast<std::size_t>(2 * k)]) /
                                    static_cast<double>(t.gamma[static_cast<std::size_t>(k)]));
      break;
    }
  }

  d.verdict = window_verdict(t, w, th);
  const double best = std::isnan(d.doubling_degree) ? d.loglog_slope : d.doubling_degree;
  d.degree = static_cast<int>(std::lround(best));
  return d;
}

double extrapolate_rate(const GrowthTable& t, Window w, RateThresholds th) {
  check_window(t, w, 1);
  if (window_verdict(t, w, th) == Verdict::polynomial) {
    throw FitRejected("window verdict is polynomial; no exponential rate to extrapolate");
  }
  std::vector<double> xs, ys;
  for (int k = w.kmin; k <= w.kmax; ++k) {
    xs.push_back(static_cast<double>(k));
    ys.push_back(std::log(static_cast<double>(t.gamma[static_cast<std::size_t>(k)])));
  }
  return std::exp(least_squares_slope(xs, ys));
}

double entropy_of(double omega) {
  if (!(omega >= 1.0)) throw DomainError("entropy needs omega >= 1");
  return std::log(omega);
}

std::optional<Window> default_window(const GrowthTable& t) {
  const int r = t.radius();
  const Window w{std::max(2, r / 2), r};
  if (w.kmax - w.kmin + 1 < 4) return std::nullopt;
  return w;
}

RateEstimates estimate_rates(const GrowthTable& t, std::optional<Window> w, RateThresholds th) {
  RateEstimates r;
  r.root_bounds = root_bounds(t);
  for (int k = 1; k + 1 <= t.radius(); ++k) {
    if (t.sigma[static_cast<std::size_t>(k)] == 0) {
      r.degenerate_at = k;
      r.notes.push_back("sphere " + std::to_string(k) + " is empty; ratios stop there");
      break;
    }
    r.ratios.push_back(sphere_ratio(t, k));
  }
  if (!r.root_bounds.empty()) r.inf_root = *std::min_element(r.root_bounds.begin(), r.root_bounds.end());
  r.entropy = entropy_of(std::max(1.0, r.inf_root));

  if (!w) w = default_window(t);
  if (!w) {
    r.notes.push_back("table too short for a degree window");
    return r;
  }
  r.window = w;
  r.degree = poly_degree(t, *w, th);
  if (r.degree->verdict != Verdict::polynomial) {
    r.extrapolated_rate = extrapolate_rate(t, *w, th);
  }
  r.notes.push_back("ratios and extrapolation are heuristics; root bounds are rigorous upper bounds");
  return r;
}

}  // namespace growth
