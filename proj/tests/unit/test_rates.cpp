#include <cmath>

#include "doctest.h"

#include "growth/errors.hpp"
#include "growth/rates.hpp"
#include "../support/helpers.hpp"

using namespace growth;

namespace {

GrowthTable table_of(const GroupSpec& s, int k) {
  const GroupHandle g = make_group(s);
  return growth_table(*g, g->default_generators(), k);
}

}  // namespace

TEST_SUITE("rates") {
  TEST_CASE("root bounds") {
    const auto u = root_bounds(table_of(GroupSpec::free(2), 3));
    REQUIRE(u.size() == 3);
    CHECK(u[0] == 5);
    CHECK(u[2] == doctest::Approx(std::cbrt(53.0)).epsilon(1e-14));
    for (double x : root_bounds(table_of(GroupSpec::trivial(), 5))) CHECK(x == 1);
    const auto z = root_bounds(table_of(GroupSpec::free(1), 20));
    for (std::size_t i = 0; i < z.size(); ++i) {
      CHECK(z[i] == doctest::Approx(std::pow(2.0 * static_cast<double>(i + 1) + 1, 1.0 / static_cast<double>(i + 1))));
      if (i > 0) CHECK(z[i] < z[i - 1]);
    }
  }

  TEST_CASE("ratios") {
    for (double r : ratio_estimates(table_of(GroupSpec::free(2), 8))) CHECK(r == 3);
    CHECK_THROWS_AS(ratio_estimates(table_of(GroupSpec::cyclic(5), 4)), DegenerateSphere);
    CHECK_NOTHROW(ratio_estimates(table_of(GroupSpec::cyclic(5), 3)));
    const auto z2 = ratio_estimates(table_of(GroupSpec::free_abelian(2), 40));
    CHECK(z2.back() == doctest::Approx(40.0 / 39.0));
  }

  TEST_CASE("polynomial degree") {
    const GrowthTable h = table_of(GroupSpec::heisenberg(), 40);
    const DegreeEstimate dh = poly_degree(h, {10, 40});
    CHECK(dh.verdict == Verdict::polynomial);
    CHECK(dh.doubling_degree >= 3.5);
    CHECK(dh.doubling_degree <= 4.5);
    CHECK(dh.degree == 4);

    const DegreeEstimate d3 = poly_degree(table_of(GroupSpec::free_abelian(3), 40), {10, 40});
    CHECK(d3.verdict == Verdict::polynomial);
    CHECK(d3.doubling_degree == doctest::Approx(3.0).epsilon(0.1));
    CHECK(d3.degree == 3);

    CHECK(poly_degree(table_of(GroupSpec::free(2), 9), {3, 9}).verdict == Verdict::exponential);
    CHECK_THROWS_AS(poly_degree(h, {1, 40}), PreconditionViolation);
    CHECK_THROWS_AS(poly_degree(h, {10, 12}), WindowTooSmall);
    CHECK_THROWS_AS(poly_degree(h, {10, 41}), PreconditionViolation);
  }

  TEST_CASE("extrapolation") {
    CHECK(extrapolate_rate(table_of(GroupSpec::free(2), 10), {3, 10}) == doctest::Approx(3.0).epsilon(0.01));
    CHECK(extrapolate_rate(table_of(GroupSpec::free(3), 7), {3, 7}) == doctest::Approx(5.0).epsilon(0.01));
    const GrowthTable dihedral =
        table_of(GroupSpec::free_product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}), 30);
    CHECK_THROWS_AS(extrapolate_rate(dihedral, {10, 30}), FitRejected);
  }

  TEST_CASE("entropy") {
    CHECK(entropy_of(1) == 0);
    CHECK(entropy_of(std::exp(1.0)) == doctest::Approx(1.0));
    CHECK(entropy_of(std::sqrt(2.0)) == doctest::Approx(0.34657).epsilon(1e-5));
    CHECK_THROWS_AS(entropy_of(0.5), DomainError);
  }

  TEST_CASE("estimate_rates bundles the pieces") {
    const RateEstimates r = estimate_rates(table_of(GroupSpec::free(2), 8));
    CHECK(r.root_bounds.size() == 8);
    CHECK(r.ratios.size() == 7);
    CHECK(r.inf_root == doctest::Approx(std::pow(13121.0, 1.0 / 8)));
    CHECK(r.entropy == doctest::Approx(std::log(r.inf_root)));
    REQUIRE(r.window.has_value());
    CHECK(r.window->kmin == 4);
    CHECK(r.window->kmax == 8);
    REQUIRE(r.extrapolated_rate.has_value());

    const RateEstimates c = estimate_rates(table_of(GroupSpec::cyclic(5), 6));
    REQUIRE(c.degenerate_at.has_value());
    CHECK(*c.degenerate_at == 3);
    CHECK(c.ratios.size() == 2);

    const RateEstimates shortt = estimate_rates(table_of(GroupSpec::free(2), 2));
    CHECK_FALSE(shortt.window.has_value());
  }

  TEST_CASE("property: u_2k <= u_k and every u_k >= inf u") {
    for (const GroupSpec& s : testing::sample_specs()) {
      const auto u = root_bounds(table_of(s, 5));
      const double inf = *std::min_element(u.begin(), u.end());
      for (double x : u) CHECK(x >= inf);
      // gamma(2k) <= gamma(k)^2 gives u_2k <= u_k.
      for (std::size_t k = 1; 2 * k <= u.size(); ++k) CHECK(u[2 * k - 1] <= u[k - 1] * (1 + 1e-12));
    }
  }
}
