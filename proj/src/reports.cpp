#include "growth/reports.hpp"

#include <sstream>

#include "growth/errors.hpp"
#include "growth/numeric.hpp"
#include "growth/spec_json.hpp"

namespace growth {

using nlohmann::json;

namespace {

json rounded(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(round12(x));
  return a;
}

json optional_float(const std::optional<double>& v) {
  if (!v) return nullptr;
  return round12(*v);
}

json generators_json(const Group& g, const GeneratingSet& s) {
  json a = json::array();
  for (const Element& e : s.elements) a.push_back(g.format(e));
  return a;
}

}  // namespace

std::string growth_csv(const GrowthTable& t) {
  std::ostringstream out;
  out << "k,gamma,sigma,root_bound,ratio\n";
  for (int k = 0; k <= t.radius(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    out << k << ',' << t.gamma[i] << ',' << t.sigma[i] << ',';
    if (k >= 1) out << format12(kth_root(t.gamma[i], k));
    out << ',';
    if (k >= 1 && k + 1 <= t.radius() && t.sigma[i] != 0) {
      out << format12(static_cast<double>(t.sigma[i + 1]) / static_cast<double>(t.sigma[i]));
    }
    out << '\n';
  }
  return out.str();
}

json to_json(const GrowthTable& t) {
  return {
      {"spec", to_json(t.spec)},
      {"kmax", t.kmax},
      {"radius", t.radius()},
      {"gamma", t.gamma},
      {"sigma", t.sigma},
      {"generators", t.gens.elements.size()},
      {"complete", t.complete},
      {"slow_path", t.slow_path},
      {"elements", t.budget_used.elements},
      {"products", t.budget_used.products},
  };
}

json to_json(const RateEstimates& r) {
  json j = {
      {"root_bounds", rounded(r.root_bounds)},
      {"ratios", rounded(r.ratios)},
      {"inf_root", round12(r.inf_root)},
      {"entropy", round12(r.entropy)},
  };
  j["degenerate_at"] = r.degenerate_at ? json(*r.degenerate_at) : json(nullptr);
  if (r.window) {
    j["window"] = {r.window->kmin, r.window->kmax};
  } else {
    j["window"] = nullptr;
  }
  if (r.degree) {
    j["verdict"] = to_string(r.degree->verdict);
    j["degree"] = {
        {"loglog_slope", round12(r.degree->loglog_slope)},
        {"doubling_degree", std::isnan(r.degree->doubling_degree) ? json(nullptr)
                                                                  : json(round12(r.degree->doubling_degree))},
        {"doubling_k", r.degree->doubling_k},
        {"rounded", r.degree->degree},
    };
  } else {
    j["verdict"] = to_string(Verdict::inconclusive);
    j["degree"] = nullptr;
  }
  j["extrapolated_rate"] = optional_float(r.extrapolated_rate);
  j["notes"] = r.notes;
  return j;
}

json to_json(const BoundReport& r) {
  json detail = json::array();
  for (const HypothesisCheck& h : r.hypotheses) {
    detail.push_back({{"name", h.name}, {"ok", h.ok}, {"detail", h.detail}});
  }
  return {
      {"theorem", to_string(r.theorem)},
      {"hypotheses_ok", r.hypotheses_ok},
      {"hypothesis_detail", std::move(detail)},
      {"value", optional_float(r.value)},
      {"exact_form", r.exact_form ? json(*r.exact_form) : json(nullptr)},
      {"notes", r.notes},
  };
}

json to_json(const SearchReport& r, const Group& g) {
  json cands = json::array();
  for (const SearchCandidate& c : r.candidates) {
    cands.push_back({
        {"set", generators_json(g, c.set)},
        {"gamma", c.gamma},
        {"root_bound", round12(c.root_bound)},
        {"complete", c.complete},
    });
  }
  return {
      {"spec", to_json(g.spec())},
      {"k", r.k},
      {"candidates_tested", r.candidates_tested},
      {"skipped_duplicates", r.skipped_duplicates},
      {"skipped_not_generating", r.skipped_not_generating},
      {"best_set", generators_json(g, r.best_set)},
      {"best_root_bound", round12(r.best_root_bound)},
      {"complete", r.complete},
      {"candidates", std::move(cands)},
      {"notes", json::array({"the minimum root bound is an upper bound for omega(G) only"})},
  };
}

json to_json(const UniversalReport& u) {
  json j = to_json(u.report);
  json branches = json::array();
  for (const Branch& b : u.branches) {
    branches.push_back({
        {"name", b.name},
        {"value", optional_float(b.value)},
        {"exact_form", b.exact_form},
        {"known", b.value.has_value()},
    });
  }
  j["branches"] = std::move(branches);
  j["attained_by"] = u.attained_by;
  j["unknown_branches"] = u.unknown_branches;
  return j;
}

std::string scan_csv(const ScanReport& s) {
  std::ostringstream out;
  out << "det,trace,a,b,c,d,lambda_exact,lambda_float,osin_bound\n";
  for (const ScanRow& r : s.rows) {
    out << r.det << ',' << r.trace << ',' << r.matrix.a << ',' << r.matrix.b << ',' << r.matrix.c << ','
        << r.matrix.d << ',' << r.lambda.to_string() << ',' << format12(r.lambda_float) << ','
        << format12(r.osin) << '\n';
  }
  return out.str();
}

namespace {

json class_json(const ClassSummary& c) {
  return {
      {"det", c.det},
      {"count", c.count},
      {"min_lambda", c.min_lambda ? json(c.min_lambda->to_string()) : json(nullptr)},
      {"min_lambda_float", c.min_lambda ? json(round12(static_cast<double>(c.min_lambda->to_long_double())))
                                        : json(nullptr)},
      {"min_lambda_matrix", c.min_lambda_matrix ? to_json(*c.min_lambda_matrix) : json(nullptr)},
      {"min_osin_bound", optional_float(c.min_osin)},
      {"lambda_at_most_2", c.lambda_at_most_2},
      {"lambda_at_most_2_flag", c.lambda_at_most_2_flag},
  };
}

}  // namespace

json scan_summary_json(const ScanReport& s) {
  return {
      {"entry_bound", s.entry_bound},
      {"hyperbolic_count", s.rows.size()},
      {"det_plus_1", class_json(s.plus)},
      {"det_minus_1", class_json(s.minus)},
      {"notes", s.notes},
  };
}

std::vector<BoundReport> applicable_bounds(const GroupSpec& spec) {
  std::vector<BoundReport> out;
  switch (spec.family) {
    case Family::free_product: {
      BoundReport b = free_product_bound(spec.factors);
      if (b.hypotheses_ok) out.push_back(std::move(b));
      break;
    }
    case Family::torus_bundle:
      if (is_hyperbolic(spec.matrix)) {
        out.push_back(osin_bound(spec.matrix));
        out.push_back(solvable_universal_bound());
      }
      break;
    case Family::surface:
      out.push_back(surface_bound(spec.param));
      out.push_back(surface_weak_bound(spec.param));
      break;
    case Family::direct_product_with_Z:
      if (spec.inner().family == Family::surface) out.push_back(surface_bound(spec.inner().param));
      break;
    default:
      break;
  }
  return out;
}

VerifyOutcome verify_table(const GrowthTable& t, const std::vector<BoundReport>& bounds, double margin) {
  const std::vector<double> u = root_bounds(t);
  VerifyOutcome v;
  json& report = v.report;
  report = {{"spec", to_json(t.spec)}, {"kmax", t.kmax},           {"radius", t.radius()},
            {"complete", t.complete}, {"slow_path", t.slow_path}, {"margin", margin}};
  std::optional<double> min_u;
  int min_k = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!min_u || u[i] < *min_u) {
      min_u = u[i];
      min_k = static_cast<int>(i) + 1;
    }
  }
  report["min_root_bound"] = optional_float(min_u);
  report["min_root_k"] = min_u ? json(min_k) : json(nullptr);

  json checks = json::array();
  json notes = json::array();
  for (const BoundReport& b : bounds) {
    if (!b.value) continue;
    const bool ok = !min_u || *min_u >= *b.value - margin;
    v.pass = v.pass && ok;
    checks.push_back({{"theorem", to_string(b.theorem)},
                      {"bound", round12(*b.value)},
                      {"exact_form", b.exact_form ? json(*b.exact_form) : json(nullptr)},
                      {"pass", ok}});
  }
  if (checks.empty()) notes.push_back("no applicable lower bound for family " + family_name(t.spec.family));
  if (!min_u) notes.push_back("table has no radius >= 1; nothing to compare");
  if (!t.complete) notes.push_back("budget exhausted; compared radii 1.." + std::to_string(t.radius()) + " only");
  report["checks"] = std::move(checks);
  report["pass"] = v.pass;
  report["notes"] = std::move(notes);
  return v;
}

BCGConstantTable bcg_table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("constants") || !j.at("constants").is_array()) {
    throw InvalidSpec("bcg table needs a \"constants\" array");
  }
  BCGConstantTable t;
  for (const json& e : j.at("constants")) {
    if (!e.is_object() || !e.contains("n") || !e.contains("a") || !e.contains("c") ||
        !e.at("n").is_number_integer() || !e.at("a").is_number() || !e.at("c").is_number()) {
      throw InvalidSpec("bcg constant entries need integer \"n\" and numeric \"a\", \"c\"");
    }
    try {
      t.set(e.at("n").get<int>(), e.at("a").get<double>(), e.at("c").get<double>());
    } catch (const DomainError& err) {
      throw InvalidSpec(std::string("bcg table: ") + err.what());
    }
  }
  return t;
}

}  // namespace growth
