#include <algorithm>

#include "doctest.h"

#include "growth/errors.hpp"
#include "growth/manifold.hpp"
#include "growth/rates.hpp"

using namespace growth;

TEST_SUITE("manifold") {
  TEST_CASE("group_of_manifold") {
    const ManifoldSpec z2z2 = ManifoldSpec::connected_sum({ManifoldSpec::spherical(2), ManifoldSpec::spherical(2)});
    CHECK(group_of_manifold(z2z2) == GroupSpec::free_product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}));
    CHECK(group_of_manifold(ManifoldSpec::connected_sum({}, 2)) ==
          GroupSpec::free_product({GroupSpec::free(1), GroupSpec::free(1)}));
    CHECK(group_of_manifold(ManifoldSpec::hyperbolic_torus_bundle({2, 1, 1, 1})) ==
          GroupSpec::torus_bundle({2, 1, 1, 1}));
    CHECK(group_of_manifold(ManifoldSpec::seifert_product(2)) ==
          GroupSpec::direct_product_with_Z(GroupSpec::surface(2)));
    CHECK(group_of_manifold(ManifoldSpec::three_torus()) == GroupSpec::free_abelian(3));
    CHECK(group_of_manifold(ManifoldSpec::nil_manifold()) == GroupSpec::heisenberg());
    CHECK(group_of_manifold(ManifoldSpec::lens_like(7)) == GroupSpec::cyclic(7));
    CHECK_THROWS_AS(group_of_manifold(ManifoldSpec::twisted_I_bundle_klein_double()), InvalidSpec);
    CHECK_THROWS_AS(group_of_manifold(ManifoldSpec::connected_sum({ManifoldSpec::three_torus()})), InvalidSpec);
    CHECK_THROWS_AS(group_of_manifold(ManifoldSpec::hyperbolic_torus_bundle({1, 1, 0, 1})), InvalidSpec);
  }

  TEST_CASE("property: connected-sum factor count") {
    for (int s = 0; s <= 3; ++s) {
      for (int k = 0; k <= 3; ++k) {
        if (s + k < 2) continue;
        std::vector<ManifoldSpec> pieces(static_cast<std::size_t>(s), ManifoldSpec::spherical(3));
        const GroupSpec g = group_of_manifold(ManifoldSpec::connected_sum(pieces, k));
        CHECK(g.factors.size() == static_cast<std::size_t>(s + k));
      }
    }
  }

  TEST_CASE("classify_growth") {
    const GrowthClass nil = classify_growth(ManifoldSpec::nil_manifold());
    CHECK(nil.verdict == GrowthClass::Kind::polynomial);
    CHECK(*nil.degree == 4);

    const GrowthClass d = classify_growth(
        ManifoldSpec::connected_sum({ManifoldSpec::spherical(2), ManifoldSpec::spherical(2)}));
    CHECK(d.verdict == GrowthClass::Kind::polynomial);
    CHECK(*d.degree == 1);

    const GrowthClass tb = classify_growth(ManifoldSpec::hyperbolic_torus_bundle({2, 1, 1, 1}));
    CHECK(tb.verdict == GrowthClass::Kind::exponential);
    CHECK(*tb.lower_bound == doctest::Approx(1.4962).epsilon(1e-4));
    CHECK(*tb.theorem_tag == Theorem::osin_polycyclic);

    const GrowthClass sf = classify_growth(ManifoldSpec::seifert_product(2));
    CHECK(*sf.lower_bound == 5);
    CHECK(*sf.theorem_tag == Theorem::surface_4g3);

    const GrowthClass sum = classify_growth(
        ManifoldSpec::connected_sum({ManifoldSpec::spherical(2), ManifoldSpec::lens_like(3)}));
    CHECK(*sum.lower_bound == doctest::Approx(std::sqrt(2.0)));
    CHECK(*sum.theorem_tag == Theorem::bucher_free_product);

    CHECK(classify_growth(ManifoldSpec::spherical(120)).verdict == GrowthClass::Kind::finite);
    CHECK(*classify_growth(ManifoldSpec::three_torus()).degree == 3);
    CHECK(*classify_growth(ManifoldSpec::twisted_I_bundle_klein_double()).degree == 3);
    CHECK(*classify_growth(ManifoldSpec::torus_times_interval_double()).degree == 3);
  }

  TEST_CASE("property: every exponential verdict carries a bound > 1 and a tag") {
    const std::vector<ManifoldSpec> ms = {
        ManifoldSpec::hyperbolic_torus_bundle({1, 1, 1, 0}),
        ManifoldSpec::hyperbolic_torus_bundle({5, 2, 2, 1}),
        ManifoldSpec::seifert_product(3),
        ManifoldSpec::connected_sum({}, 3),
        ManifoldSpec::connected_sum({ManifoldSpec::spherical(2), ManifoldSpec::spherical(2)}, 1),
        ManifoldSpec::connected_sum({ManifoldSpec::spherical(2), ManifoldSpec::spherical(2), ManifoldSpec::spherical(2)}),
    };
    for (const ManifoldSpec& m : ms) {
      const GrowthClass c = classify_growth(m);
      REQUIRE(c.verdict == GrowthClass::Kind::exponential);
      CHECK(*c.lower_bound > 1);
      CHECK(c.theorem_tag.has_value());
    }
  }

  TEST_CASE("round trip: verdicts match enumeration") {
    struct Case {
      ManifoldSpec m;
      int kmax;
    };
    const std::vector<Case> cases = {
        {ManifoldSpec::three_torus(), 24},
        {ManifoldSpec::nil_manifold(), 40},
        {ManifoldSpec::connected_sum({ManifoldSpec::spherical(2), ManifoldSpec::spherical(2)}), 30},
        {ManifoldSpec::connected_sum({ManifoldSpec::spherical(2), ManifoldSpec::lens_like(3)}), 12},
        {ManifoldSpec::connected_sum({}, 2), 8},
        {ManifoldSpec::hyperbolic_torus_bundle({2, 1, 1, 1}), 9},
        {ManifoldSpec::seifert_product(2), 3},
        {ManifoldSpec::spherical(5), 6},
    };
    for (const Case& c : cases) {
      CAPTURE(to_string(c.m.kind));
      const GrowthClass k = classify_growth(c.m);
      const GroupHandle g = make_group(group_of_manifold(c.m));
      const GrowthTable t = growth_table(*g, g->default_generators(), c.kmax);
      switch (k.verdict) {
        case GrowthClass::Kind::finite:
          CHECK(t.gamma.back() == *k.order);
          break;
        case GrowthClass::Kind::polynomial: {
          const DegreeEstimate d = poly_degree(t, {c.kmax / 2, c.kmax});
          CHECK(d.verdict == Verdict::polynomial);
          CHECK(std::fabs(d.doubling_degree - *k.degree) <= 0.5);
          break;
        }
        case GrowthClass::Kind::exponential: {
          const auto u = root_bounds(t);
          CHECK(*k.lower_bound <= *std::min_element(u.begin(), u.end()));
          break;
        }
      }
    }
  }

  TEST_CASE("universal constant") {
    const UniversalReport def = universal_constant();
    CHECK(*def.report.value == kSixthRoot2.value());
    CHECK(def.attained_by == "solvable");
    CHECK(def.unknown_branches == std::vector<std::string>{"hyperbolic", "seifert"});

    UniversalConfig off;
    off.bcg_table.set(3, 1, 0.05);
    CHECK(*universal_constant(off).report.value == *def.report.value);

    UniversalConfig on = off;
    on.include_bcg = true;
    on.bcg_table.set(2, 1, 0.05);
    const UniversalReport u = universal_constant(on);
    CHECK(*u.report.value == doctest::Approx(std::exp(0.05)));
    CHECK(*u.report.value == doctest::Approx(1.0513).epsilon(1e-4));
    CHECK(u.unknown_branches.empty());
  }

  TEST_CASE("json") {
    const ManifoldSpec m = ManifoldSpec::connected_sum(
        {ManifoldSpec::hyperbolic_torus_bundle({2, 1, 1, 1}), ManifoldSpec::seifert_product(2)}, 1);
    const ManifoldSpec back = manifold_spec_from_json(to_json(m));
    CHECK(to_json(back) == to_json(m));
    CHECK_THROWS_AS(manifold_spec_from_json(nlohmann::json::parse(R"({"kind":"mystery"})")), InvalidSpec);
    CHECK_THROWS_AS(manifold_spec_from_json(nlohmann::json::parse(R"({"kind":"spherical","params":{}})")),
                    InvalidSpec);
    const nlohmann::json c = to_json(classify_growth(ManifoldSpec::nil_manifold()));
    CHECK(c["verdict"] == "polynomial");
    CHECK(c["degree"] == 4);
    CHECK_FALSE(c.contains("lower_bound"));
  }
}
