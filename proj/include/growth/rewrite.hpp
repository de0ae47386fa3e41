#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace growth::rewrite {

/// One letter of a word: a generator index and whether it is inverted.
/// Letters order as x0 < x0' < x1 < x1' < ...
struct Letter {
  std::uint32_t generator = 0;
  bool inverted = false;

  Letter inverse() const { return {generator, !inverted}; }
  std::uint32_t code() const { return generator * 2 + (inverted ? 1 : 0); }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    return a.code() <=> b.code();
  }
};

using Word = std::vector<Letter>;

Word inverse(std::span<const Letter> w);
Word concat(std::span<const Letter> a, std::span<const Letter> b);
Word free_reduce(std::span<const Letter> w);
bool is_freely_reduced(std::span<const Letter> w);

/// Shortlex: shorter words first, then lexicographic on letter codes.
bool shortlex_less(std::span<const Letter> a, std::span<const Letter> b);

/// Renders with single-letter names a, b, c, ... and an apostrophe for inverses,
/// space separated. Past 26 generators names become x26, x27, ...
std::string format_word(std::span<const Letter> w);
std::string format_word(std::span<const Letter> w, const std::vector<std::string>& names);

// ---------------------------------------------------------------------------
// Surface groups
// ---------------------------------------------------------------------------

/// The genus-g surface relator [a1,b1]...[ag,bg] over generators
/// a_i = 2(i-1), b_i = 2(i-1)+1, with all 8g cyclic variants of r and r^-1.
class SurfaceRelator {
 public:
  explicit SurfaceRelator(int genus);

  int genus() const { return genus_; }
  std::size_t length() const { return relator_.size(); }
  std::size_t alphabet_size() const { return static_cast<std::size_t>(2 * genus_); }
  const Word& relator() const { return relator_; }
  const std::vector<Word>& variants() const { return variants_; }

 private:
  int genus_;
  Word relator_;
  std::vector<Word> variants_;
};

/// Dehn's algorithm. Replaces the leftmost longest subword that is more than
/// half of a cyclic relator variant by the inverse of the complementary part,
/// freely reduces, and repeats until no such subword remains.
Word dehn_reduce(std::span<const Letter> w, const SurfaceRelator& r);

/// Word-problem oracle: u == v in the surface group.
bool dehn_equal(std::span<const Letter> u, std::span<const Letter> v, const SurfaceRelator& r);

inline constexpr std::size_t kDefaultClosureBudget = 20000;

/// Least word (shortest, then lexicographic) reachable from a Dehn-reduced
/// word by exactly-half relator substitutions, free reduction and Dehn
/// reduction. A move that shortens the word restarts the closure from the
/// shorter word, so the result has minimal length within the closure.
/// Throws ClosureBudgetExceeded when more than `budget` words are visited.
Word surface_canonical(std::span<const Letter> w, const SurfaceRelator& r,
                       std::size_t budget = kDefaultClosureBudget);

// ---------------------------------------------------------------------------
// String rewriting
// ---------------------------------------------------------------------------

struct Rule {
  Word lhs;
  Word rhs;
  friend bool operator==(const Rule&, const Rule&) = default;
};

enum class Ordering { shortlex };

struct CompletionLimits {
  std::size_t max_rules = 500;
  std::size_t max_len = 20;
};

struct RewriteSystem {
  std::vector<Rule> rules;
  Ordering ordering = Ordering::shortlex;
  bool confluent = false;
  // Set when completion stopped on a limit. The rules are still valid
  // consequences of the input and may be used for reduction, not for keys.
  bool limit_exceeded = false;
};

/// Bounded Knuth-Bendix completion under shortlex. Each input pair is an
/// equation; it is oriented so the shortlex-greater side rewrites to the other.
RewriteSystem kb_complete(const std::vector<Rule>& equations, Ordering order = Ordering::shortlex,
                          CompletionLimits limits = {});

/// Rewrites leftmost-first until no left-hand side occurs.
Word rw_normalize(const RewriteSystem& sys, std::span<const Letter> w);

// ---------------------------------------------------------------------------
// Presentations
// ---------------------------------------------------------------------------

// Text form:
//   presentation := generators [ '|' [ relation { ',' relation } ] ]
//   generators   := name { ',' name }
//   relation     := word [ '=' word ]        (a bare word means word = 1)
//   word         := '1' | letter { letter }
//   letter       := name [ "'" ]
//   name         := [a-z][a-z0-9_]*
// Letters inside a word are separated by whitespace.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Rule> relations;  // relator r is stored as (r, empty)
};

Presentation parse_presentation(std::string_view text);
Word parse_word(std::string_view text, const std::vector<std::string>& generators);

/// Relations plus x x' = 1 and x' x = 1 for every generator.
std::vector<Rule> group_equations(const Presentation& p);

}  // namespace growth::rewrite
