#pragma once

#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "growth/cayley.hpp"
#include "growth/groups.hpp"
#include "growth/rewrite.hpp"

namespace testing {

/// Oracle letters (lowercase generator, uppercase inverse) as a library word.
inline growth::rewrite::Word to_word(const std::string& s) {
  growth::rewrite::Word w;
  for (char c : s) {
    w.push_back({static_cast<std::uint32_t>(std::tolower(c) - 'a'), std::isupper(c) != 0});
  }
  return w;
}

inline std::vector<std::uint64_t> gamma_of(const growth::GroupSpec& spec, int k, unsigned workers = 1) {
  const growth::GroupHandle g = growth::make_group(spec);
  growth::EnumerationOptions o;
  o.workers = workers;
  return growth::growth_table(*g, g->default_generators(), k, o).gamma;
}

/// Product of `len` uniformly chosen generators.
inline growth::Element random_element(const growth::Group& g, std::mt19937_64& rng, int len) {
  const growth::GeneratingSet s = g.default_generators();
  growth::Element e = g.identity();
  if (s.elements.empty()) return e;
  std::uniform_int_distribution<std::size_t> pick(0, s.elements.size() - 1);
  for (int i = 0; i < len; ++i) e = g.mul(e, s.elements[pick(rng)]);
  return e;
}

inline std::vector<growth::GroupSpec> sample_specs() {
  using growth::GroupSpec;
  return {
      GroupSpec::trivial(),
      GroupSpec::cyclic(5),
      GroupSpec::free(2),
      GroupSpec::free_abelian(3),
      GroupSpec::heisenberg(),
      GroupSpec::klein_bottle(),
      GroupSpec::surface(2),
      GroupSpec::torus_bundle({2, 1, 1, 1}),
      GroupSpec::torus_bundle({1, 1, 1, 0}),
      GroupSpec::free_product({GroupSpec::cyclic(2), GroupSpec::cyclic(3)}),
      GroupSpec::free_product({GroupSpec::free(1), GroupSpec::cyclic(2), GroupSpec::free_abelian(2)}),
      GroupSpec::direct_product_with_Z(GroupSpec::surface(2)),
      GroupSpec::direct_product_with_Z(GroupSpec::heisenberg()),
  };
}

}  // namespace testing
