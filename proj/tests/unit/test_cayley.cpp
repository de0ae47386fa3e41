#include "doctest.h"

#include "growth/cayley.hpp"
#include "growth/errors.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace growth;
using testing::gamma_of;
using Counts = std::vector<std::uint64_t>;

namespace {

void check_submultiplicative(const Counts& g) {
  for (std::size_t m = 0; m < g.size(); ++m) {
    for (std::size_t n = 0; m + n < g.size(); ++n) {
      REQUIRE(g[m + n] <= g[m] * g[n]);
    }
  }
}

}  // namespace

TEST_SUITE("cayley") {
  TEST_CASE("examples") {
    CHECK(gamma_of(GroupSpec::free(2), 3) == Counts{1, 5, 17, 53});
    CHECK(gamma_of(GroupSpec::free_abelian(2), 3) == Counts{1, 5, 13, 25});
    CHECK(gamma_of(GroupSpec::heisenberg(), 2) == Counts{1, 5, 17});
    CHECK(gamma_of(GroupSpec::free_product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}), 5) ==
          Counts{1, 3, 5, 7, 9, 11});
    CHECK(gamma_of(GroupSpec::trivial(), 3) == Counts{1, 1, 1, 1});
    CHECK(gamma_of(GroupSpec::cyclic(5), 4) == Counts{1, 3, 5, 5, 5});
    CHECK(gamma_of(GroupSpec::free(2), 0) == Counts{1});
  }

  TEST_CASE("sigma column") {
    const GroupHandle g = make_group(GroupSpec::free(2));
    const GrowthTable t = growth_table(*g, g->default_generators(), 4);
    CHECK(t.sigma == Counts{1, 4, 12, 36, 108});
    CHECK(t.complete);
    CHECK_FALSE(t.slow_path);
    CHECK(t.radius() == 4);
  }

  TEST_CASE("oracle: free groups") {
    CHECK(gamma_of(GroupSpec::free(2), 7) == oracle::free_ball(2, 7));
    CHECK(gamma_of(GroupSpec::free(3), 5) == oracle::free_ball(3, 5));
    CHECK(gamma_of(GroupSpec::free(1), 9) == oracle::free_ball(1, 9));
  }

  TEST_CASE("oracle: lattices") {
    for (int n = 1; n <= 4; ++n) CHECK(gamma_of(GroupSpec::free_abelian(n), 12) == oracle::lattice_ball(n, 12));
  }

  TEST_CASE("oracle: matrix models") {
    CHECK(gamma_of(GroupSpec::heisenberg(), 10) == oracle::heisenberg_ball(10));
    CHECK(gamma_of(GroupSpec::torus_bundle({2, 1, 1, 1}), 7) == oracle::torus_bundle_ball(2, 1, 1, 1, 7));
    CHECK(gamma_of(GroupSpec::torus_bundle({1, 1, 1, 0}), 7) == oracle::torus_bundle_ball(1, 1, 1, 0, 7));
    CHECK(gamma_of(GroupSpec::torus_bundle({3, 1, 2, 1}), 6) == oracle::torus_bundle_ball(3, 1, 2, 1, 6));
    CHECK(gamma_of(GroupSpec::free_product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}), 30) ==
          oracle::dihedral_ball(30));
  }

  TEST_CASE("oracle: free products from syllable counts") {
    const Counts z{0, 2, 2, 2, 2, 2, 2, 2, 2, 2};
    CHECK(gamma_of(GroupSpec::free_product({GroupSpec::cyclic(2), GroupSpec::cyclic(3)}), 9) ==
          oracle::free_product_ball({oracle::cyclic_spheres(2), oracle::cyclic_spheres(3)}, 9));
    CHECK(gamma_of(GroupSpec::free_product({GroupSpec::cyclic(3), GroupSpec::cyclic(5), GroupSpec::free(1)}), 7) ==
          oracle::free_product_ball({oracle::cyclic_spheres(3), oracle::cyclic_spheres(5), z}, 7));
    CHECK(gamma_of(GroupSpec::free_product({GroupSpec::free(1), GroupSpec::free(1)}), 8) == oracle::free_ball(2, 8));
  }

  TEST_CASE("oracle: surface and Seifert product") {
    const oracle::SurfaceOracle o = oracle::surface_ball(2, 4);
    CHECK(gamma_of(GroupSpec::surface(2), 4) == o.gamma);
    CHECK(gamma_of(GroupSpec::surface(3), 3) == oracle::surface_ball(3, 3).gamma);
    CHECK(gamma_of(GroupSpec::direct_product_with_Z(GroupSpec::surface(2)), 4) == oracle::times_z_ball(o.gamma));
    CHECK(gamma_of(GroupSpec::direct_product_with_Z(GroupSpec::free_abelian(2)), 8) == oracle::lattice_ball(3, 8));
  }

  TEST_CASE("pairwise fallback agrees with keyed dedupe") {
    GroupOptions tiny;
    tiny.closure_budget = 1;
    const GroupHandle g = make_group(GroupSpec::surface(2), tiny);
    const GrowthTable t = growth_table(*g, g->default_generators(), 4);
    CHECK(t.slow_path);
    CHECK(t.gamma == gamma_of(GroupSpec::surface(2), 4));
  }

  TEST_CASE("budget truncation") {
    const GroupHandle g = make_group(GroupSpec::free(2));
    EnumerationOptions o;
    o.budget.max_elements = 60;
    const GrowthTable t = growth_table(*g, g->default_generators(), 8, o);
    CHECK_FALSE(t.complete);
    CHECK(t.gamma == Counts{1, 5, 17, 53});
    CHECK(t.kmax == 8);
  }

  TEST_CASE("property: determinism across worker counts") {
    for (const GroupSpec& s : {GroupSpec::free(3), GroupSpec::heisenberg(), GroupSpec::surface(2),
                               GroupSpec::torus_bundle({2, 1, 1, 1})}) {
      const Counts one = gamma_of(s, 5, 1);
      CHECK(gamma_of(s, 5, 3) == one);
      CHECK(gamma_of(s, 5, 8) == one);
    }
  }

  TEST_CASE("property: submultiplicativity on every table") {
    for (const GroupSpec& s : testing::sample_specs()) {
      CAPTURE(family_name(s.family));
      check_submultiplicative(gamma_of(s, 5));
    }
  }

  TEST_CASE("is_generating") {
    const GroupHandle z = make_group(GroupSpec::free_abelian(1));
    CHECK(is_generating(*z, symmetrize(*z, {Element::lattice({2}), Element::lattice({3})}), 3) == Generation::yes);
    const GroupHandle z2 = make_group(GroupSpec::free_abelian(2));
    CHECK(is_generating(*z2, symmetrize(*z2, {Element::lattice({2, 0}), Element::lattice({0, 1})}), 10) ==
          Generation::unknown);
    const GroupHandle c6 = make_group(GroupSpec::cyclic(6));
    CHECK(is_generating(*c6, symmetrize(*c6, {Element::residue(2)}), 10) == Generation::no);
    for (const GroupSpec& s : testing::sample_specs()) {
      const GroupHandle g = make_group(s);
      CHECK(is_generating(*g, g->default_generators(), 3) == Generation::yes);
    }
  }

  TEST_CASE("search") {
    const GroupHandle z = make_group(GroupSpec::free_abelian(1));
    const SearchReport r = search_generating_sets(*z, 2, 1, 10);
    CHECK(r.best_root_bound == doctest::Approx(std::pow(21.0, 0.1)).epsilon(1e-12));
    REQUIRE(r.best_set.elements.size() == 2);
    CHECK(z->format(r.best_set.elements[0]) == "(1)");
    CHECK(r.skipped_not_generating >= 1);

    const GroupHandle f2 = make_group(GroupSpec::free(2));
    const SearchReport s = search_generating_sets(*f2, 1, 2, 6);
    CHECK(s.best_root_bound == doctest::Approx(std::pow(1457.0, 1.0 / 6)).epsilon(1e-12));
    CHECK(s.best_root_bound == doctest::Approx(3.367).epsilon(1e-3));

    CHECK_THROWS_AS(search_generating_sets(*f2, 1, 0, 4), PreconditionViolation);
  }
}
