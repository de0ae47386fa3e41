#include "growth/manifold.hpp"

#include <array>
#include <cmath>

#include "growth/errors.hpp"
#include "growth/numeric.hpp"
#include "growth/spec_json.hpp"

namespace growth {

namespace {

const std::array<std::pair<ManifoldKind, const char*>, 9> kKindNames{{
    {ManifoldKind::connected_sum, "connected_sum"},
    {ManifoldKind::hyperbolic_torus_bundle, "hyperbolic_torus_bundle"},
    {ManifoldKind::seifert_product_circle_times_surface, "seifert_product_circle_times_surface"},
    {ManifoldKind::three_torus, "three_torus"},
    {ManifoldKind::nil_manifold_heisenberg, "nil_manifold_heisenberg"},
    {ManifoldKind::spherical, "spherical"},
    {ManifoldKind::lens_like, "lens_like"},
    {ManifoldKind::torus_times_interval_double, "torus_times_interval_double"},
    {ManifoldKind::twisted_I_bundle_klein_double, "twisted_I_bundle_klein_double"},
}};

ManifoldSpec of_kind(ManifoldKind k) {
  ManifoldSpec m;
  m.kind = k;
  return m;
}

bool is_order_two(const ManifoldSpec& m) {
  return (m.kind == ManifoldKind::spherical || m.kind == ManifoldKind::lens_like) && m.param == 2;
}

}  // namespace

std::string to_string(ManifoldKind k) {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "unknown";
}

ManifoldSpec ManifoldSpec::connected_sum(std::vector<ManifoldSpec> summands, std::int64_t s2xs1_count) {
  ManifoldSpec m = of_kind(ManifoldKind::connected_sum);
  m.summands = std::move(summands);
  m.s2xs1_count = s2xs1_count;
  return m;
}

ManifoldSpec ManifoldSpec::hyperbolic_torus_bundle(const MatrixZ2& a) {
  ManifoldSpec m = of_kind(ManifoldKind::hyperbolic_torus_bundle);
  m.matrix = a;
  return m;
}

ManifoldSpec ManifoldSpec::seifert_product(std::int64_t genus) {
  ManifoldSpec m = of_kind(ManifoldKind::seifert_product_circle_times_surface);
  m.param = genus;
  return m;
}

ManifoldSpec ManifoldSpec::three_torus() { return of_kind(ManifoldKind::three_torus); }
ManifoldSpec ManifoldSpec::nil_manifold() { return of_kind(ManifoldKind::nil_manifold_heisenberg); }

ManifoldSpec ManifoldSpec::spherical(std::int64_t order) {
  ManifoldSpec m = of_kind(ManifoldKind::spherical);
  m.param = order;
  return m;
}

ManifoldSpec ManifoldSpec::lens_like(std::int64_t order) {
  ManifoldSpec m = of_kind(ManifoldKind::lens_like);
  m.param = order;
  return m;
}

ManifoldSpec ManifoldSpec::torus_times_interval_double() { return of_kind(ManifoldKind::torus_times_interval_double); }
ManifoldSpec ManifoldSpec::twisted_I_bundle_klein_double() {
  return of_kind(ManifoldKind::twisted_I_bundle_klein_double);
}

void validate(const ManifoldSpec& m) {
  switch (m.kind) {
    case ManifoldKind::connected_sum:
      if (m.s2xs1_count < 0) throw InvalidSpec("s2xs1_count must be >= 0");
      if (static_cast<std::int64_t>(m.summands.size()) + m.s2xs1_count < 2) {
        throw InvalidSpec("connected sum needs at least two pieces");
      }
      for (const ManifoldSpec& s : m.summands) validate(s);
      return;
    case ManifoldKind::hyperbolic_torus_bundle:
      if (!is_hyperbolic(m.matrix)) throw InvalidSpec("torus bundle matrix " + m.matrix.to_string() + " is not hyperbolic");
      return;
    case ManifoldKind::seifert_product_circle_times_surface:
      if (m.param < 2) throw InvalidSpec("seifert product needs genus >= 2");
      return;
    case ManifoldKind::spherical:
    case ManifoldKind::lens_like:
      if (m.param < 2) throw InvalidSpec(to_string(m.kind) + " needs fundamental group order >= 2");
      return;
    default:
      return;
  }
}

GroupSpec group_of_manifold(const ManifoldSpec& m) {
  validate(m);
  switch (m.kind) {
    case ManifoldKind::connected_sum: {
      std::vector<GroupSpec> factors;
      for (const ManifoldSpec& s : m.summands) factors.push_back(group_of_manifold(s));
      for (std::int64_t i = 0; i < m.s2xs1_count; ++i) factors.push_back(GroupSpec::free(1));
      return GroupSpec::free_product(std::move(factors));
    }
    case ManifoldKind::hyperbolic_torus_bundle:
      return GroupSpec::torus_bundle(m.matrix);
    case ManifoldKind::seifert_product_circle_times_surface:
      return GroupSpec::direct_product_with_Z(GroupSpec::surface(m.param));
    case ManifoldKind::three_torus:
      return GroupSpec::free_abelian(3);
    case ManifoldKind::nil_manifold_heisenberg:
      return GroupSpec::heisenberg();
    case ManifoldKind::spherical:
    case ManifoldKind::lens_like:
      return GroupSpec::cyclic(m.param);
    case ManifoldKind::torus_times_interval_double:
    case ManifoldKind::twisted_I_bundle_klein_double:
      break;
  }
  throw InvalidSpec(to_string(m.kind) + " is a classification-only tag without an enumerable group");
}

std::string to_string(GrowthClass::Kind k) {
  switch (k) {
    case GrowthClass::Kind::finite:
      return "finite";
    case GrowthClass::Kind::polynomial:
      return "polynomial";
    case GrowthClass::Kind::exponential:
      return "exponential";
  }
  return "unknown";
}

namespace {

GrowthClass polynomial(int degree, std::string note) {
  GrowthClass c;
  c.verdict = GrowthClass::Kind::polynomial;
  c.degree = degree;
  c.notes.push_back(std::move(note));
  return c;
}

GrowthClass exponential(const BoundReport& bound, std::string note) {
  GrowthClass c;
  c.verdict = GrowthClass::Kind::exponential;
  c.lower_bound = bound.value;
  c.theorem_tag = bound.theorem;
  c.notes.push_back(std::move(note));
  return c;
}

}  // namespace

GrowthClass classify_growth(const ManifoldSpec& m) {
  validate(m);
  switch (m.kind) {
    case ManifoldKind::spherical:
    case ManifoldKind::lens_like: {
      GrowthClass c;
      c.verdict = GrowthClass::Kind::finite;
      c.order = static_cast<std::uint64_t>(m.param);
      c.notes.push_back("finite fundamental group");
      return c;
    }
    case ManifoldKind::three_torus:
      return polynomial(3, "Z^3: polynomial growth of degree 3");
    case ManifoldKind::nil_manifold_heisenberg:
      return polynomial(4, "Heisenberg group: polynomial growth of degree 4");
    case ManifoldKind::torus_times_interval_double:
    case ManifoldKind::twisted_I_bundle_klein_double:
      return polynomial(3, "flat branch (virtually Z^3); classification only, not verified by enumeration");
    case ManifoldKind::connected_sum: {
      if (m.summands.size() == 2 && m.s2xs1_count == 0 && is_order_two(m.summands[0]) &&
          is_order_two(m.summands[1])) {
        return polynomial(1, "Z2 * Z2 is the infinite dihedral group, virtually Z: excluded from the free-product bound");
      }
      const GroupSpec g = group_of_manifold(m);
      const BoundReport bound = free_product_bound(g.factors);
      if (!bound.hypotheses_ok) {
        // Only Z2 * Z2 fails once trivial factors are rejected; kept as a guard.
        return polynomial(1, "free-product hypotheses fail");
      }
      return exponential(bound, "free product of " + std::to_string(g.factors.size()) + " factors");
    }
    case ManifoldKind::hyperbolic_torus_bundle:
      return exponential(osin_bound(m.matrix), "split extension Z^2 x|_A Z");
    case ManifoldKind::seifert_product_circle_times_surface:
      return exponential(surface_bound(m.param), "omega(Z x pi1(F_g)) >= omega(pi1(F_g)) >= 4g-3");
  }
  throw InvalidSpec("unsupported manifold kind");
}

UniversalReport universal_constant(const UniversalConfig& config) {
  UniversalReport u;
  u.branches.push_back({"jsj", kFourthRoot2.value(), kFourthRoot2.exact_form()});
  u.branches.push_back({"nonprime", kSqrt2.value(), kSqrt2.exact_form()});
  u.branches.push_back({"solvable", kSixthRoot2.value(), kSixthRoot2.exact_form()});
  const std::pair<const char*, int> bcg_branches[] = {{"hyperbolic", 3}, {"seifert", 2}};
  for (const auto& [name, n] : bcg_branches) {
    std::optional<double> c;
    if (config.include_bcg) c = config.bcg_table.get(n, 1.0);
    if (c) {
      u.branches.push_back({name, std::exp(*c), "e^c(" + std::to_string(n) + ",1) = e^" + format12(*c)});
    } else {
      u.branches.push_back({name, std::nullopt, "e^c(" + std::to_string(n) + ",1)"});
      u.unknown_branches.push_back(name);
    }
  }

  const Branch* best = nullptr;
  for (const Branch& b : u.branches) {
    if (b.value && (!best || *b.value < *best->value)) best = &b;
  }
  u.attained_by = best->name;
  u.report.theorem = Theorem::universal_C;
  u.report.hypotheses_ok = true;
  u.report.value = *best->value;
  u.report.exact_form = best->exact_form;
  u.report.hypotheses.push_back({"minimum_over_known_branches", true, "attained by " + best->name});
  for (const std::string& name : u.unknown_branches) {
    u.report.notes.push_back("branch " + name + " has an unknown constant (no c(n,a) supplied)");
  }
  return u;
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

ManifoldKind parse_kind(const std::string& name) {
  for (const auto& [kind, n] : kKindNames) {
    if (name == n) return kind;
  }
  throw InvalidSpec("unknown manifold kind '" + name + "'");
}

std::int64_t param_int(const json& params, const char* key, const std::string& where) {
  if (!params.is_object() || !params.contains(key) || !params.at(key).is_number_integer()) {
    throw InvalidSpec(where + ": integer \"" + key + "\" required");
  }
  return params.at(key).get<std::int64_t>();
}

}  // namespace

ManifoldSpec manifold_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw InvalidSpec("manifold spec needs a string \"kind\"");
  }
  const ManifoldKind kind = parse_kind(j.at("kind").get<std::string>());
  const json empty = json::object();
  const json& params = j.contains("params") ? j.at("params") : empty;
  const std::string where = to_string(kind);
  ManifoldSpec m = of_kind(kind);
  switch (kind) {
    case ManifoldKind::connected_sum: {
      if (params.contains("summands")) {
        if (!params.at("summands").is_array()) throw InvalidSpec("connected_sum: \"summands\" must be an array");
        for (const json& s : params.at("summands")) m.summands.push_back(manifold_spec_from_json(s));
      }
      if (params.contains("s2xs1_count")) m.s2xs1_count = param_int(params, "s2xs1_count", where);
      break;
    }
    case ManifoldKind::hyperbolic_torus_bundle:
      if (!params.contains("A")) throw InvalidSpec(where + ": \"A\" required");
      m.matrix = matrix_from_json(params.at("A"));
      break;
    case ManifoldKind::seifert_product_circle_times_surface:
      m.param = param_int(params, "g", where);
      break;
    case ManifoldKind::spherical:
    case ManifoldKind::lens_like:
      m.param = param_int(params, "m", where);
      break;
    default:
      break;
  }
  validate(m);
  return m;
}

json to_json(const ManifoldSpec& m) {
  json params = json::object();
  switch (m.kind) {
    case ManifoldKind::connected_sum: {
      json s = json::array();
      for (const ManifoldSpec& x : m.summands) s.push_back(to_json(x));
      params["summands"] = std::move(s);
      params["s2xs1_count"] = m.s2xs1_count;
      break;
    }
    case ManifoldKind::hyperbolic_torus_bundle:
      params["A"] = to_json(m.matrix);
      break;
    case ManifoldKind::seifert_product_circle_times_surface:
      params["g"] = m.param;
      break;
    case ManifoldKind::spherical:
    case ManifoldKind::lens_like:
      params["m"] = m.param;
      break;
    default:
      break;
  }
  return {{"kind", to_string(m.kind)}, {"params", std::move(params)}};
}

json to_json(const GrowthClass& c) {
  json j = {{"verdict", to_string(c.verdict)}};
  if (c.degree) j["degree"] = *c.degree;
  if (c.order) j["order"] = *c.order;
  if (c.lower_bound) j["lower_bound"] = round12(*c.lower_bound);
  if (c.theorem_tag) j["theorem_tag"] = to_string(*c.theorem_tag);
  j["notes"] = c.notes;
  return j;
}

}  // namespace growth
