#include <random>

#include "doctest.h"

#include "growth/errors.hpp"
#include "growth/rewrite.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

namespace rw = growth::rewrite;
using testing::to_word;

namespace {

std::string fmt(const rw::Word& w) { return rw::format_word(w); }

}  // namespace

TEST_SUITE("rewrite.free") {
  TEST_CASE("free_reduce examples") {
    CHECK(fmt(rw::free_reduce(to_word("aAb"))) == "b");
    CHECK(rw::free_reduce(rw::Word{}).empty());
    CHECK(rw::free_reduce(to_word("abBA")).empty());
    CHECK(fmt(to_word("aB")) == "a b'");
  }

  TEST_CASE("property: free_reduce matches the string oracle") {
    std::mt19937_64 rng(5);
    const std::string letters = oracle::alphabet(3);
    for (int i = 0; i < 2000; ++i) {
      std::string s;
      const int len = static_cast<int>(rng() % 12);
      for (int j = 0; j < len; ++j) s.push_back(letters[rng() % letters.size()]);
      const rw::Word r = rw::free_reduce(to_word(s));
      CHECK(r == to_word(oracle::reduce_free(s)));
      CHECK(rw::is_freely_reduced(r));
      CHECK(rw::free_reduce(rw::concat(r, rw::inverse(r))).empty());
    }
  }

  TEST_CASE("shortlex order") {
    CHECK(rw::shortlex_less(to_word("b"), to_word("aa")));
    CHECK(rw::shortlex_less(to_word("ab"), to_word("aB")));
    CHECK(rw::shortlex_less(to_word("aB"), to_word("Ab")));
    CHECK_FALSE(rw::shortlex_less(to_word("ab"), to_word("ab")));
  }
}

TEST_SUITE("rewrite.dehn") {
  const rw::SurfaceRelator r2(2);

  TEST_CASE("relator variants") {
    CHECK(r2.length() == 8);
    CHECK(r2.variants().size() == 16);
    CHECK(fmt(r2.relator()) == "a b a' b' c d c' d'");
  }

  TEST_CASE("dehn_reduce examples") {
    CHECK(fmt(rw::dehn_reduce(to_word("abABc"), r2)) == "d c d'");
    CHECK(fmt(rw::dehn_reduce(to_word("ab"), r2)) == "a b");
    CHECK(rw::dehn_reduce(r2.relator(), r2).empty());
    CHECK(rw::dehn_reduce(rw::inverse(r2.relator()), r2).empty());
  }

  TEST_CASE("property: dehn_reduce agrees with the string oracle on triviality") {
    std::mt19937_64 rng(17);
    const std::string rel = oracle::surface_relator(2);
    const std::string letters = oracle::alphabet(4);
    for (int i = 0; i < 3000; ++i) {
      // Conjugates of relator powers mixed with noise, plus random words.
      std::string s;
      const int parts = static_cast<int>(rng() % 4);
      for (int j = 0; j < parts; ++j) {
        std::string c;
        for (int t = 0; t < static_cast<int>(rng() % 3); ++t) c.push_back(letters[rng() % letters.size()]);
        const std::size_t shift = rng() % rel.size();
        std::string piece = rel.substr(shift) + rel.substr(0, shift);
        if (rng() % 2) piece = oracle::invert(piece);
        s += c + piece + oracle::invert(c);
      }
      if (rng() % 3 == 0) s.push_back(letters[rng() % letters.size()]);
      const bool trivial = oracle::dehn(s, rel).empty();
      CHECK(rw::dehn_reduce(to_word(s), r2).empty() == trivial);
    }
  }

  TEST_CASE("canonical examples") {
    CHECK(rw::surface_canonical(rw::Word{}, r2).empty());
    CHECK(fmt(rw::surface_canonical(to_word("ab"), r2)) == "a b");
    const rw::Word u = to_word("abAB");
    const rw::Word v_inv = rw::inverse(to_word("cdCD"));
    CHECK(rw::surface_canonical(u, r2) == rw::surface_canonical(v_inv, r2));
  }

  TEST_CASE("exhaustive: canonical keys agree with Dehn equality for words of length <= 4") {
    const std::vector<std::string> words = oracle::reduced_words(4, 4);
    const std::string rel = oracle::surface_relator(2);
    std::map<std::vector<int>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < words.size(); ++i) buckets[oracle::abelianization(words[i], 4)].push_back(i);
    std::vector<rw::Word> keys;
    for (const std::string& w : words) keys.push_back(rw::surface_canonical(rw::dehn_reduce(to_word(w), r2), r2));
    std::size_t equal_pairs = 0;
    for (const auto& [a, members] : buckets) {
      for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          const bool same = oracle::surface_equal(words[members[x]], words[members[y]], rel);
          equal_pairs += same ? 1 : 0;
          REQUIRE((keys[members[x]] == keys[members[y]]) == same);
        }
      }
    }
    // Pairs of distinct reduced words of length 4 spelling half relators.
    CHECK(equal_pairs == 8);
  }

  TEST_CASE("closure budget") {
    CHECK_THROWS_AS(rw::surface_canonical(to_word("abAB"), r2, 1), growth::ClosureBudgetExceeded);
  }
}

TEST_SUITE("rewrite.kb") {
  TEST_CASE("presentation parsing") {
    const rw::Presentation p = rw::parse_presentation("a, b | a b a' b'");
    CHECK(p.generators == std::vector<std::string>{"a", "b"});
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0].rhs.empty());
    CHECK(rw::parse_presentation("x1,y_2 | x1 y_2 = y_2 x1, 1 = x1 x1").relations.size() == 2);
    CHECK(rw::parse_presentation("a").relations.empty());
    CHECK_THROWS_AS(rw::parse_presentation(""), growth::ParseError);
    CHECK_THROWS_AS(rw::parse_presentation("a, a"), growth::ParseError);
    CHECK_THROWS_AS(rw::parse_presentation("a | b"), growth::ParseError);
    CHECK_THROWS_AS(rw::parse_presentation("A | A"), growth::ParseError);
    CHECK_THROWS_AS(rw::parse_word("a ''", {"a"}), growth::ParseError);
  }

  TEST_CASE("Z^2 completes") {
    const rw::Presentation p = rw::parse_presentation("a, b | b a = a b");
    const rw::RewriteSystem sys = rw::kb_complete(rw::group_equations(p));
    CHECK(sys.confluent);
    CHECK_FALSE(sys.limit_exceeded);
    CHECK(sys.rules.size() == 8);
    CHECK(fmt(rw::rw_normalize(sys, to_word("ba"))) == "a b");
    CHECK(fmt(rw::rw_normalize(sys, to_word("baB"))) == "a");
    CHECK(rw::rw_normalize(sys, rw::Word{}).empty());
  }

  TEST_CASE("free group keeps only inverse cancellation") {
    const rw::RewriteSystem sys = rw::kb_complete(rw::group_equations(rw::parse_presentation("a, b")));
    CHECK(sys.confluent);
    CHECK(sys.rules.size() == 4);
    for (const rw::Rule& r : sys.rules) {
      CHECK(r.lhs.size() == 2);
      CHECK(r.rhs.empty());
    }
    CHECK(rw::rw_normalize(sys, to_word("aA")).empty());
  }

  TEST_CASE("finite cyclic group") {
    const rw::RewriteSystem sys = rw::kb_complete(rw::group_equations(rw::parse_presentation("a | a a a")));
    CHECK(sys.confluent);
    CHECK(fmt(rw::rw_normalize(sys, to_word("aaaaa"))) == "a'");
    CHECK(fmt(rw::rw_normalize(sys, to_word("AA"))) == "a");
  }

  TEST_CASE("genus-2 surface under tight limits stays partial") {
    rw::CompletionLimits tight;
    tight.max_rules = 20;
    tight.max_len = 8;
    const rw::RewriteSystem sys =
        rw::kb_complete(rw::group_equations(rw::parse_presentation("a, b, c, d | a b a' b' c d c' d'")),
                        rw::Ordering::shortlex, tight);
    CHECK_FALSE(sys.confluent);
    CHECK(sys.limit_exceeded);
  }

  TEST_CASE("property: random equation walks keep the Z^2 normal form") {
    const rw::Presentation p = rw::parse_presentation("a, b | b a = a b");
    const std::vector<rw::Rule> eqs = rw::group_equations(p);
    const rw::RewriteSystem sys = rw::kb_complete(eqs);
    std::mt19937_64 rng(23);
    const std::string letters = oracle::alphabet(2);
    for (int i = 0; i < 500; ++i) {
      std::string s;
      for (int j = 0; j < static_cast<int>(rng() % 10); ++j) s.push_back(letters[rng() % 4]);
      const auto e = oracle::abelianization(s, 2);
      // Oracle normal form a^x b^y.
      std::string expect;
      expect.append(static_cast<std::size_t>(std::abs(e[0])), e[0] > 0 ? 'a' : 'A');
      expect.append(static_cast<std::size_t>(std::abs(e[1])), e[1] > 0 ? 'b' : 'B');
      rw::Word w = to_word(s);
      for (int step = 0; step < 30; ++step) {
        // Apply a random equation in a random direction at a random position.
        const rw::Rule& eq = eqs[rng() % eqs.size()];
        const bool forward = rng() % 2 == 0;
        const rw::Word& from = forward ? eq.lhs : eq.rhs;
        const rw::Word& to = forward ? eq.rhs : eq.lhs;
        std::vector<std::size_t> spots;
        for (std::size_t at = 0; at + from.size() <= w.size(); ++at) {
          if (std::equal(from.begin(), from.end(), w.begin() + static_cast<std::ptrdiff_t>(at))) spots.push_back(at);
        }
        if (spots.empty()) continue;
        const std::size_t at = spots[rng() % spots.size()];
        rw::Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
        next.insert(next.end(), to.begin(), to.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(at + from.size()), w.end());
        w = std::move(next);
      }
      CHECK(rw::rw_normalize(sys, w) == to_word(expect));
    }
  }

  TEST_CASE("property: completed systems give one normal form for random conjugates of relators") {
    const rw::Presentation p = rw::parse_presentation("a, b | a a a, b b, a b a b");  // S3
    const rw::RewriteSystem sys = rw::kb_complete(rw::group_equations(p));
    REQUIRE(sys.confluent);
    std::mt19937_64 rng(29);
    const std::string letters = oracle::alphabet(2);
    std::set<rw::Word> forms;
    for (int i = 0; i < 2000; ++i) {
      std::string s;
      for (int j = 0; j < static_cast<int>(rng() % 14); ++j) s.push_back(letters[rng() % 4]);
      forms.insert(rw::rw_normalize(sys, to_word(s)));
    }
    CHECK(forms.size() == 6);
  }
}
