#include "growth/rewrite.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "growth/errors.hpp"

namespace growth::rewrite {

Word inverse(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(std::span<const Letter> a, std::span<const Letter> b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word free_reduce(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& x : w) {
    if (!out.empty() && out.back() == x.inverse()) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

bool is_freely_reduced(std::span<const Letter> w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) return false;
  }
  return true;
}

bool shortlex_less(std::span<const Letter> a, std::span<const Letter> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

std::string default_name(std::uint32_t g) {
  if (g < 26) return std::string(1, static_cast<char>('a' + g));
  return "x" + std::to_string(g);
}

}  // namespace

std::string format_word(std::span<const Letter> w) {
  std::string out;
  for (const Letter& x : w) {
    if (!out.empty()) out += ' ';
    out += default_name(x.generator);
    if (x.inverted) out += '\'';
  }
  return out;
}

std::string format_word(std::span<const Letter> w, const std::vector<std::string>& names) {
  std::string out;
  for (const Letter& x : w) {
    if (!out.empty()) out += ' ';
    out += x.generator < names.size() ? names[x.generator] : default_name(x.generator);
    if (x.inverted) out += '\'';
  }
  return out;
}

// ---------------------------------------------------------------------------

SurfaceRelator::SurfaceRelator(int genus) : genus_(genus) {
  if (genus < 1) throw InvalidGenus("surface relator needs genus >= 1");
  for (int i = 0; i < genus; ++i) {
    const auto a = static_cast<std::uint32_t>(2 * i);
    const auto b = a + 1;
    relator_.push_back({a, false});
    relator_.push_back({b, false});
    relator_.push_back({a, true});
    relator_.push_back({b, true});
  }
  const Word inv = inverse(relator_);
  for (const Word* base : std::initializer_list<const Word*>{&relator_, &inv}) {
    for (std::size_t shift = 0; shift < base->size(); ++shift) {
      Word v;
      v.reserve(base->size());
      for (std::size_t k = 0; k < base->size(); ++k) v.push_back((*base)[(shift + k) % base->size()]);
      variants_.push_back(std::move(v));
    }
  }
}

namespace {

std::size_t match_length(std::span<const Letter> w, std::size_t pos, const Word& variant) {
  std::size_t m = 0;
  while (pos + m < w.size() && m < variant.size() && w[pos + m] == variant[m]) ++m;
  return m;
}

// Replaces w[pos, pos+len) (a prefix of `variant`) by the inverse of the rest of
// the variant, then freely reduces.
Word splice(std::span<const Letter> w, std::size_t pos, std::size_t len, const Word& variant) {
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  for (std::size_t k = variant.size(); k > len; --k) out.push_back(variant[k - 1].inverse());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
  return free_reduce(out);
}

}  // namespace

Word dehn_reduce(std::span<const Letter> input, const SurfaceRelator& r) {
  Word w = free_reduce(input);
  const std::size_t half = r.length() / 2;
  for (;;) {
    bool changed = false;
    for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
      std::size_t best = 0;
      const Word* best_variant = nullptr;
      for (const Word& v : r.variants()) {
        const std::size_t m = match_length(w, pos, v);
        if (m > best) {
          best = m;
          best_variant = &v;
        }
      }
      if (best > half) {
        w = splice(w, pos, best, *best_variant);
        changed = true;
      }
    }
    if (!changed) return w;
  }
}

bool dehn_equal(std::span<const Letter> u, std::span<const Letter> v, const SurfaceRelator& r) {
  return dehn_reduce(concat(u, inverse(v)), r).empty();
}

Word surface_canonical(std::span<const Letter> input, const SurfaceRelator& r, std::size_t budget) {
  const std::size_t half = r.length() / 2;
  Word start = dehn_reduce(input, r);
  if (start.size() < half) return start;  // no exactly-half subword fits

  std::set<Word> seen{start};
  std::deque<Word> queue{start};
  std::size_t visited = 1;
  std::size_t best_len = start.size();
  while (!queue.empty()) {
    Word x = std::move(queue.front());
    queue.pop_front();
    bool restarted = false;
    for (std::size_t pos = 0; pos + half <= x.size() && !restarted; ++pos) {
      for (const Word& v : r.variants()) {
        if (match_length(x, pos, v) < half) continue;
        Word y = dehn_reduce(splice(x, pos, half, v), r);
        if (y.size() < best_len) {
          best_len = y.size();
          seen = {y};
          queue.clear();
          queue.push_back(std::move(y));
          restarted = true;
          break;
        }
        if (y.size() == best_len && seen.insert(y).second) {
          if (++visited > budget) {
            throw ClosureBudgetExceeded("surface canonical closure exceeded " +
                                        std::to_string(budget) + " words");
          }
          queue.push_back(std::move(y));
        }
      }
    }
  }
  return *seen.begin();
}

// ---------------------------------------------------------------------------

namespace {

bool occurs_at(std::span<const Letter> w, std::size_t pos, const Word& pattern) {
  if (pos + pattern.size() > w.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool contains(std::span<const Letter> w, const Word& pattern) {
  if (pattern.size() > w.size()) return false;
  for (std::size_t i = 0; i + pattern.size() <= w.size(); ++i) {
    if (occurs_at(w, i, pattern)) return true;
  }
  return false;
}

// Stack-based leftmost-innermost reduction over an explicit rule list.
Word normalize_with(const std::vector<const Rule*>& rules, std::span<const Letter> w) {
  Word out;
  std::vector<Letter> input(w.rbegin(), w.rend());  // back() is the next letter
  while (!input.empty()) {
    out.push_back(input.back());
    input.pop_back();
    for (const Rule* rule : rules) {
      const Word& lhs = rule->lhs;
      if (lhs.empty() || lhs.size() > out.size()) continue;
      if (!std::equal(lhs.begin(), lhs.end(), out.end() - static_cast<std::ptrdiff_t>(lhs.size()))) {
        continue;
      }
      out.resize(out.size() - lhs.size());
      for (auto it = rule->rhs.rbegin(); it != rule->rhs.rend(); ++it) input.push_back(*it);
      break;
    }
  }
  return out;
}

class Completion {
 public:
  explicit Completion(CompletionLimits limits) : limits_(limits) {}

  // Returns false once a limit is hit.
  bool add_equation(const Word& u, const Word& v) {
    pending_.push_back({u, v});
    while (!pending_.empty()) {
      Rule eq = std::move(pending_.front());
      pending_.pop_front();
      Word l = normalize(eq.lhs);
      Word r = normalize(eq.rhs);
      if (l == r) continue;
      if (shortlex_less(l, r)) std::swap(l, r);
      if (l.size() > limits_.max_len) return false;
      install(std::move(l), std::move(r));
      if (alive_count() > limits_.max_rules) return false;
    }
    return true;
  }

  // Runs critical-pair completion; returns true when every pair resolves.
  bool complete() {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        if (!alive_[i] || !alive_[j]) continue;
        if (!resolve_overlaps(i, j)) return false;
        if (i != j && alive_[i] && alive_[j] && !resolve_overlaps(j, i)) return false;
      }
    }
    return true;
  }

  std::vector<Rule> rules() const {
    std::vector<Rule> out;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (alive_[i]) out.push_back(rules_[i]);
    }
    std::sort(out.begin(), out.end(), [](const Rule& a, const Rule& b) {
      return shortlex_less(a.lhs, b.lhs);
    });
    return out;
  }

 private:
  std::size_t alive_count() const { return static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), true)); }

  Word normalize(std::span<const Letter> w) const {
    std::vector<const Rule*> live;
    live.reserve(rules_.size());
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (alive_[i]) live.push_back(&rules_[i]);
    }
    return normalize_with(live, w);
  }

  void install(Word lhs, Word rhs) {
    const std::size_t idx = rules_.size();
    rules_.push_back({std::move(lhs), std::move(rhs)});
    alive_.push_back(true);
    // Interreduce: rules whose lhs contains the new lhs go back to the queue;
    // right-hand sides are renormalized in place.
    for (std::size_t k = 0; k < idx; ++k) {
      if (!alive_[k]) continue;
      if (contains(rules_[k].lhs, rules_[idx].lhs)) {
        alive_[k] = false;
        pending_.push_back(rules_[k]);
      }
    }
    for (std::size_t k = 0; k <= idx; ++k) {
      if (alive_[k]) rules_[k].rhs = normalize(rules_[k].rhs);
    }
  }

  // Overlaps where a proper suffix of lhs(i) is a proper prefix of lhs(j).
  bool resolve_overlaps(std::size_t i, std::size_t j) {
    const Word x = rules_[i].lhs;
    const Word y = rules_[j].lhs;
    const Word xr = rules_[i].rhs;
    const Word yr = rules_[j].rhs;
    for (std::size_t ov = 1; ov < x.size() && ov < y.size(); ++ov) {
      if (!std::equal(x.end() - static_cast<std::ptrdiff_t>(ov), x.end(), y.begin())) continue;
      Word left = xr;
      left.insert(left.end(), y.begin() + static_cast<std::ptrdiff_t>(ov), y.end());
      Word right(x.begin(), x.end() - static_cast<std::ptrdiff_t>(ov));
      right.insert(right.end(), yr.begin(), yr.end());
      if (!add_equation(left, right)) return false;
    }
    return true;
  }

  CompletionLimits limits_;
  std::vector<Rule> rules_;
  std::vector<bool> alive_;
  std::deque<Rule> pending_;
};

}  // namespace

RewriteSystem kb_complete(const std::vector<Rule>& equations, Ordering order, CompletionLimits limits) {
  Completion c(limits);
  bool ok = true;
  for (const Rule& eq : equations) {
    if (!c.add_equation(eq.lhs, eq.rhs)) {
      ok = false;
      break;
    }
  }
  if (ok) ok = c.complete();
  RewriteSystem sys;
  sys.rules = c.rules();
  sys.ordering = order;
  sys.confluent = ok;
  sys.limit_exceeded = !ok;
  return sys;
}

Word rw_normalize(const RewriteSystem& sys, std::span<const Letter> w) {
  std::vector<const Rule*> rules;
  rules.reserve(sys.rules.size());
  for (const Rule& r : sys.rules) rules.push_back(&r);
  return normalize_with(rules, w);
}

// ---------------------------------------------------------------------------

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string name() {
    skip_space();
    if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected generator name at offset " + std::to_string(pos_));
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const auto ch = static_cast<unsigned char>(text_[pos_]);
      if (!(std::islower(ch) || std::isdigit(ch) || ch == '_')) break;
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t offset() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint32_t lookup(const std::string& name, const std::vector<std::string>& gens) {
  const auto it = std::find(gens.begin(), gens.end(), name);
  if (it == gens.end()) throw ParseError("unknown generator '" + name + "'");
  return static_cast<std::uint32_t>(it - gens.begin());
}

Word lex_word(Lexer& lx, const std::vector<std::string>& gens) {
  Word w;
  if (lx.accept('1')) return w;
  while (std::islower(static_cast<unsigned char>(lx.peek()))) {
    const std::uint32_t g = lookup(lx.name(), gens);
    w.push_back({g, lx.accept('\'')});
  }
  if (w.empty()) throw ParseError("empty word at offset " + std::to_string(lx.offset()));
  return w;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Lexer lx(text);
  Presentation p;
  do {
    std::string n = lx.name();
    if (std::find(p.generators.begin(), p.generators.end(), n) != p.generators.end()) {
      throw ParseError("duplicate generator '" + n + "'");
    }
    p.generators.push_back(std::move(n));
  } while (lx.accept(','));
  if (lx.accept('|')) {
    if (!lx.at_end()) {
      do {
        Word lhs = lex_word(lx, p.generators);
        Word rhs;
        if (lx.accept('=')) rhs = lex_word(lx, p.generators);
        p.relations.push_back({std::move(lhs), std::move(rhs)});
      } while (lx.accept(','));
    }
  }
  if (!lx.at_end()) throw ParseError("unexpected input at offset " + std::to_string(lx.offset()));
  return p;
}

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  Lexer lx(text);
  if (lx.at_end()) return {};
  Word w = lex_word(lx, generators);
  if (!lx.at_end()) throw ParseError("unexpected input at offset " + std::to_string(lx.offset()));
  return w;
}

std::vector<Rule> group_equations(const Presentation& p) {
  std::vector<Rule> eqs;
  for (std::uint32_t g = 0; g < p.generators.size(); ++g) {
    eqs.push_back({{{g, false}, {g, true}}, {}});
    eqs.push_back({{{g, true}, {g, false}}, {}});
  }
  eqs.insert(eqs.end(), p.relations.begin(), p.relations.end());
  return eqs;
}

}  // namespace growth::rewrite
