#include "growth/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "growth/bounds.hpp"
#include "growth/cayley.hpp"
#include "growth/errors.hpp"
#include "growth/manifold.hpp"
#include "growth/numeric.hpp"
#include "growth/rates.hpp"
#include "growth/reports.hpp"
#include "growth/spec_json.hpp"

namespace growth::cli {

namespace {

using nlohmann::json;

struct InputError : Error {
  using Error::Error;
};

struct RunConfig {
  std::string spec_path;
  int kmax = 10;
  std::uint64_t max_elements = 0;
  std::int64_t max_seconds = 0;
  unsigned workers = 1;
  std::string out;
  std::string rates_out;
  std::string summary_out;
  std::string theorem;
  std::string matrix;
  std::string window;
  std::string indices;
  std::string bcg_path;
  std::int64_t genus = 0;
  int dimension = 3;
  double pinching = 1;
  int entry_bound = 5;
  int candidate_radius = 1;
  int set_size = 2;
  int k = 4;
  std::size_t max_candidates = 0;
  int radius_cap = 10;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw InputError(what + ": '" + s + "' is not an integer");
  }
  if (used != s.size()) throw InputError(what + ": '" + s + "' is not an integer");
  return v;
}

MatrixZ2 parse_matrix(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 4) throw InputError("--matrix expects a,b,c,d");
  return {parse_int(parts[0], "--matrix"), parse_int(parts[1], "--matrix"), parse_int(parts[2], "--matrix"),
          parse_int(parts[3], "--matrix")};
}

Window parse_window(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw InputError("--window expects kmin,kmax");
  return {static_cast<int>(parse_int(parts[0], "--window")), static_cast<int>(parse_int(parts[1], "--window"))};
}

Index parse_index(const std::string& s) {
  if (s == "inf") return Index::infinite();
  const std::int64_t v = parse_int(s, "--indices");
  if (v < 1) throw InputError("--indices: an index is at least 1");
  return Index::of(static_cast<std::uint64_t>(v));
}

json read_json(const std::string& path) {
  if (path.empty()) throw InputError("--spec is required");
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

// A group spec, or a manifold spec mapped to its fundamental group.
GroupSpec load_group_spec(const std::string& path) {
  const json j = read_json(path);
  if (j.is_object() && j.contains("kind")) return group_of_manifold(manifold_spec_from_json(j));
  return group_spec_from_json(j);
}

void check_output_path(const std::string& path) {
  if (path.empty() || path == "-") return;
  const std::filesystem::path p(path);
  const auto parent = p.parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent)) {
    throw InputError("output directory '" + parent.string() + "' does not exist");
  }
  if (std::filesystem::is_directory(p)) throw InputError("output path '" + path + "' is a directory");
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << content;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

EnumerationOptions enumeration_options(const RunConfig& c) {
  EnumerationOptions o;
  o.budget.max_elements = c.max_elements;
  o.budget.max_seconds = static_cast<double>(c.max_seconds);
  o.workers = c.workers;
  return o;
}

// ---------------------------------------------------------------------------

int cmd_growth(const RunConfig& c, std::ostream& out, std::ostream& err) {
  check_output_path(c.out);
  check_output_path(c.rates_out);
  const std::optional<Window> window = c.window.empty() ? std::nullopt : std::optional(parse_window(c.window));
  const GroupHandle g = make_group(load_group_spec(c.spec_path));
  const GrowthTable t = growth_table(*g, g->default_generators(), c.kmax, enumeration_options(c));
  const RateEstimates r = estimate_rates(t, window);

  emit(c.out, growth_csv(t), out);
  std::string rates_path = c.rates_out;
  if (rates_path.empty() && !c.out.empty() && c.out != "-") rates_path = c.out + ".rates.json";
  if (!rates_path.empty()) {
    json j = to_json(r);
    j["complete"] = t.complete;
    j["slow_path"] = t.slow_path;
    j["radius"] = t.radius();
    emit(rates_path, dump(j), out);
  }
  if (!t.complete) err << "budget exhausted: table stops at radius " << t.radius() << " (complete=false)\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  check_output_path(c.out);
  const GroupHandle g = make_group(load_group_spec(c.spec_path));
  const GrowthTable t = growth_table(*g, g->default_generators(), c.kmax, enumeration_options(c));
  const VerifyOutcome v = verify_table(t, applicable_bounds(t.spec));
  emit(c.out, dump(v.report), out);
  if (!v.pass) {
    err << "verify failed: a root bound lies below an applicable lower bound\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_bound(const RunConfig& c, std::ostream& out, std::ostream&) {
  check_output_path(c.out);
  if (c.theorem.empty()) throw InputError("--theorem is required");
  const Theorem th = parse_theorem(c.theorem);
  BoundReport r;
  switch (th) {
    case Theorem::surface_4g3:
    case Theorem::surface_2g1:
      if (c.genus == 0) throw InputError("--genus is required for " + to_string(th));
      r = th == Theorem::surface_4g3 ? surface_bound(c.genus) : surface_weak_bound(c.genus);
      break;
    case Theorem::bucher_free_product: {
      const GroupSpec spec = load_group_spec(c.spec_path);
      if (spec.family != Family::free_product) throw InputError("--spec must describe a free product");
      r = free_product_bound(spec.factors);
      break;
    }
    case Theorem::bucher_harpe_amalgam:
    case Theorem::bucher_harpe_hnn: {
      const auto parts = split(c.indices, ',');
      if (parts.size() != 2) throw InputError("--indices expects i,j (each an integer or inf)");
      const Index i = parse_index(parts[0]);
      const Index j = parse_index(parts[1]);
      r = th == Theorem::bucher_harpe_amalgam ? amalgam_bound(i, j) : hnn_bound(i, j);
      break;
    }
    case Theorem::osin_polycyclic:
      if (c.matrix.empty()) throw InputError("--matrix is required for " + to_string(th));
      r = osin_bound(parse_matrix(c.matrix));
      break;
    case Theorem::solvable_universal:
      r = solvable_universal_bound();
      break;
    case Theorem::bcg: {
      const BCGConstantTable table = c.bcg_path.empty() ? BCGConstantTable{} : bcg_table_from_json(read_json(c.bcg_path));
      r = bcg_bound(c.dimension, c.pinching, table);
      break;
    }
    case Theorem::universal_C: {
      UniversalConfig u;
      if (!c.bcg_path.empty()) {
        u.include_bcg = true;
        u.bcg_table = bcg_table_from_json(read_json(c.bcg_path));
      }
      emit(c.out, dump(to_json(universal_constant(u))), out);
      return kExitOk;
    }
  }
  emit(c.out, dump(to_json(r)), out);
  return kExitOk;
}

int cmd_scan(const RunConfig& c, std::ostream& out, std::ostream&) {
  check_output_path(c.out);
  check_output_path(c.summary_out);
  if (c.entry_bound < 0) throw InputError("--entry-bound must be >= 0");
  const ScanReport s = scan_hyperbolic(c.entry_bound);
  emit(c.out, scan_csv(s), out);
  std::string summary = c.summary_out;
  if (summary.empty() && !c.out.empty() && c.out != "-") summary = c.out + ".summary.json";
  if (!summary.empty()) emit(summary, dump(scan_summary_json(s)), out);
  return kExitOk;
}

int cmd_search(const RunConfig& c, std::ostream& out, std::ostream&) {
  check_output_path(c.out);
  const GroupHandle g = make_group(load_group_spec(c.spec_path));
  SearchBudget b;
  b.max_candidates = c.max_candidates;
  b.radius_cap = c.radius_cap;
  b.per_table = enumeration_options(c).budget;
  const SearchReport r = search_generating_sets(*g, c.candidate_radius, c.set_size, c.k, b);
  emit(c.out, dump(to_json(r, *g)), out);
  return kExitOk;
}

int cmd_classify(const RunConfig& c, std::ostream& out, std::ostream&) {
  check_output_path(c.out);
  const ManifoldSpec m = manifold_spec_from_json(read_json(c.spec_path));
  json j = to_json(classify_growth(m));
  j["manifold"] = to_json(m);
  emit(c.out, dump(j), out);
  return kExitOk;
}

int cmd_universal(const RunConfig& c, bool include_bcg, std::ostream& out, std::ostream&) {
  check_output_path(c.out);
  UniversalConfig u;
  u.include_bcg = include_bcg || !c.bcg_path.empty();
  if (!c.bcg_path.empty()) u.bcg_table = bcg_table_from_json(read_json(c.bcg_path));
  emit(c.out, dump(to_json(universal_constant(u))), out);
  return kExitOk;
}

void add_budget(CLI::App* app, RunConfig& c) {
  app->add_option("--max-elements", c.max_elements, "stop after this many ball elements (0: unlimited)");
  app->add_option("--max-seconds", c.max_seconds, "wall-clock budget in seconds (0: unlimited)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--workers", c.workers, "threads for frontier expansion")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  bool include_bcg = false;
  CLI::App app{"Growth functions and exponential growth bounds for 3-manifold groups", "growthkit"};
  app.require_subcommand(1);

  CLI::App* growth = app.add_subcommand("growth", "ball counts (CSV) and rate estimates (JSON)");
  growth->add_option("--spec", c.spec_path, "group or manifold spec JSON")->required();
  growth->add_option("--kmax", c.kmax, "largest radius")->check(CLI::NonNegativeNumber);
  growth->add_option("--out", c.out, "CSV path (default stdout)");
  growth->add_option("--rates-out", c.rates_out, "rate estimates JSON (default <out>.rates.json)");
  growth->add_option("--window", c.window, "degree window kmin,kmax");
  add_budget(growth, c);

  CLI::App* bound = app.add_subcommand("bound", "BoundReport JSON for one theorem");
  bound->add_option("--theorem", c.theorem, "theorem tag or alias")->required();
  bound->add_option("--genus", c.genus, "surface genus");
  bound->add_option("--matrix", c.matrix, "torus-bundle matrix a,b,c,d");
  bound->add_option("--spec", c.spec_path, "free-product spec JSON");
  bound->add_option("--indices", c.indices, "subgroup indices i,j (integer or inf)");
  bound->add_option("--dimension", c.dimension, "dimension n for the bcg constant");
  bound->add_option("--pinching", c.pinching, "pinching a for the bcg constant");
  bound->add_option("--bcg", c.bcg_path, "bcg constant table JSON");
  bound->add_option("--out", c.out, "JSON path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "check min u_k against every applicable bound");
  verify->add_option("--spec", c.spec_path, "group or manifold spec JSON")->required();
  verify->add_option("--kmax", c.kmax, "largest radius")->check(CLI::NonNegativeNumber);
  verify->add_option("--out", c.out, "JSON path (default stdout)");
  add_budget(verify, c);

  CLI::App* scan = app.add_subcommand("scan", "hyperbolic matrices with bounded entries");
  scan->add_option("--entry-bound", c.entry_bound, "largest |entry|");
  scan->add_option("--out", c.out, "CSV path (default stdout)");
  scan->add_option("--summary-out", c.summary_out, "summary JSON (default <out>.summary.json)");

  CLI::App* search = app.add_subcommand("search", "minimise gamma(k)^(1/k) over generating sets");
  search->add_option("--spec", c.spec_path, "group or manifold spec JSON")->required();
  search->add_option("--candidate-radius", c.candidate_radius, "candidates come from this ball");
  search->add_option("--set-size", c.set_size, "generators per candidate set");
  search->add_option("--k", c.k, "radius of the compared ball");
  search->add_option("--max-candidates", c.max_candidates, "tables to compute (0: unlimited)");
  search->add_option("--radius-cap", c.radius_cap, "radius for the generation check");
  search->add_option("--out", c.out, "JSON path (default stdout)");
  add_budget(search, c);

  CLI::App* classify = app.add_subcommand("classify", "growth class of a manifold spec");
  classify->add_option("--spec", c.spec_path, "manifold spec JSON")->required();
  classify->add_option("--out", c.out, "JSON path (default stdout)");

  CLI::App* universal = app.add_subcommand("universal", "minimum over the known branch constants");
  universal->add_option("--bcg", c.bcg_path, "bcg constant table JSON");
  universal->add_flag("--include-bcg", include_bcg, "use bcg branches (needs --bcg for values)");
  universal->add_option("--out", c.out, "JSON path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (growth->parsed()) return cmd_growth(c, out, err);
    if (bound->parsed()) return cmd_bound(c, out, err);
    if (verify->parsed()) return cmd_verify(c, out, err);
    if (scan->parsed()) return cmd_scan(c, out, err);
    if (search->parsed()) return cmd_search(c, out, err);
    if (classify->parsed()) return cmd_classify(c, out, err);
    if (universal->parsed()) return cmd_universal(c, include_bcg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace growth::cli
