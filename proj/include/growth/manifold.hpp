#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "growth/bounds.hpp"
#include "growth/groups.hpp"

namespace growth {

enum class ManifoldKind {
  connected_sum,
  hyperbolic_torus_bundle,
  seifert_product_circle_times_surface,
  three_torus,
  nil_manifold_heisenberg,
  spherical,
  lens_like,
  torus_times_interval_double,
  twisted_I_bundle_klein_double,
};

std::string to_string(ManifoldKind k);

/// `param` is the surface genus (seifert product) or the group order
/// (spherical, lens_like); `matrix` the torus-bundle monodromy.
struct ManifoldSpec {
  ManifoldKind kind = ManifoldKind::three_torus;
  std::vector<ManifoldSpec> summands;
  std::int64_t s2xs1_count = 0;
  MatrixZ2 matrix{};
  std::int64_t param = 0;

  static ManifoldSpec connected_sum(std::vector<ManifoldSpec> summands, std::int64_t s2xs1_count = 0);
  static ManifoldSpec hyperbolic_torus_bundle(const MatrixZ2& a);
  static ManifoldSpec seifert_product(std::int64_t genus);
  static ManifoldSpec three_torus();
  static ManifoldSpec nil_manifold();
  static ManifoldSpec spherical(std::int64_t order);
  static ManifoldSpec lens_like(std::int64_t order);
  static ManifoldSpec torus_times_interval_double();
  static ManifoldSpec twisted_I_bundle_klein_double();
};

void validate(const ManifoldSpec& m);

/// Throws InvalidSpec for the classification-only kinds, which carry no
/// enumerable group here.
GroupSpec group_of_manifold(const ManifoldSpec& m);

struct GrowthClass {
  enum class Kind { finite, polynomial, exponential };
  Kind verdict = Kind::finite;
  std::optional<int> degree;          // polynomial
  std::optional<std::uint64_t> order;  // finite
  std::optional<double> lower_bound;  // exponential
  std::optional<Theorem> theorem_tag;  // exponential
  std::vector<std::string> notes;
};

std::string to_string(GrowthClass::Kind k);

GrowthClass classify_growth(const ManifoldSpec& m);

struct UniversalConfig {
  bool include_bcg = false;
  BCGConstantTable bcg_table;
};

struct Branch {
  std::string name;
  std::optional<double> value;  // nullopt: constant unknown
  std::string exact_form;
};

struct UniversalReport {
  BoundReport report;  // theorem universal_C, value = minimum over known branches
  std::vector<Branch> branches;
  std::string attained_by;
  std::vector<std::string> unknown_branches;
};

UniversalReport universal_constant(const UniversalConfig& config = {});

// JSON mirrors the type: {"kind": name, "params": {...}}
//   connected_sum {"summands": [...], "s2xs1_count": k}
//   hyperbolic_torus_bundle {"A": [[a,b],[c,d]]}
//   seifert_product_circle_times_surface {"g"}
//   spherical / lens_like {"m"}
ManifoldSpec manifold_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ManifoldSpec& m);
nlohmann::json to_json(const GrowthClass& c);

}  // namespace growth
