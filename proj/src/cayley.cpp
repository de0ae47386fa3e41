#include "growth/cayley.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "growth/errors.hpp"
#include "growth/numeric.hpp"

namespace growth {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(double seconds) : start_(Clock::now()), seconds_(seconds) {}
  bool expired() const { return seconds_ > 0 && elapsed() > seconds_; }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_;
  double seconds_;
};

// Breadth-first sphere expansion. Only spheres k-1 and k are retained: for
// a symmetric S, a product x*s with x in sphere k lands in sphere k-1, k or
// k+1, so those are the only places a duplicate can live.
class BallExplorer {
 public:
  BallExplorer(const Group& g, const std::vector<Element>& gens, bool pairwise, unsigned workers,
               const Deadline& deadline)
      : g_(g), gens_(gens), pairwise_(pairwise), workers_(std::max(1u, workers)), deadline_(deadline) {
    add(cur_, g_.identity(), pairwise_ ? g_.coarse_key(g_.identity()) : g_.canonical_key(g_.identity()));
  }

  const std::vector<Element>& sphere() const { return cur_.elems; }
  const std::vector<ByteKey>& sphere_keys() const { return cur_.keys; }
  std::uint64_t products() const { return products_; }

  // Computes the next sphere. Returns false when the deadline expired first.
  bool advance() {
    Sphere next = pairwise_ ? expand_pairwise() : expand_keyed();
    if (aborted_) return false;
    prev_ = std::move(cur_);
    cur_ = std::move(next);
    return true;
  }

 private:
  struct Sphere {
    std::vector<Element> elems;
    std::vector<ByteKey> keys;  // canonical keys, or coarse keys in pairwise mode
    std::unordered_set<ByteKey> key_set;
    std::unordered_multimap<ByteKey, std::size_t> buckets;  // pairwise mode only
  };

  void add(Sphere& s, Element e, ByteKey key) const {
    if (pairwise_) {
      s.buckets.emplace(key, s.elems.size());
    } else {
      s.key_set.insert(key);
    }
    s.keys.push_back(std::move(key));
    s.elems.push_back(std::move(e));
  }

  Sphere expand_keyed() {
    const std::size_t n = cur_.elems.size();
    const std::size_t chunks = std::clamp<std::size_t>(n / 512, 1, workers_);
    std::vector<std::vector<std::pair<ByteKey, Element>>> found(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> products{0};

    auto work = [&](std::size_t c) {
      try {
        std::unordered_set<ByteKey> local;
        std::uint64_t count = 0;
        const std::size_t begin = n * c / chunks;
        const std::size_t end = n * (c + 1) / chunks;
        for (std::size_t i = begin; i < end && !stop.load(std::memory_order_relaxed); ++i) {
          for (const Element& s : gens_) {
            Element y = g_.mul(cur_.elems[i], s);
            ByteKey key = g_.canonical_key(y);
            ++count;
            if (prev_.key_set.count(key) || cur_.key_set.count(key)) continue;
            if (!local.insert(key).second) continue;
            found[c].emplace_back(std::move(key), std::move(y));
          }
          if ((i & 1023) == 0 && deadline_.expired()) stop = true;
        }
        products += count;
      } catch (...) {
        errors[c] = std::current_exception();
        stop = true;
      }
    };

    if (chunks == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      threads.reserve(chunks);
      for (std::size_t c = 0; c < chunks; ++c) threads.emplace_back(work, c);
      for (auto& t : threads) t.join();
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    products_ += products;
    if (stop || deadline_.expired()) {
      aborted_ = true;
      return {};
    }
    // Chunk-ordered merge: the result does not depend on the worker count.
    Sphere next;
    for (auto& chunk : found) {
      for (auto& [key, e] : chunk) {
        if (next.key_set.count(key)) continue;
        add(next, std::move(e), std::move(key));
      }
    }
    return next;
  }

  static bool in_bucket(const Group& g, const Sphere& s, const ByteKey& coarse, const Element& y) {
    const auto [lo, hi] = s.buckets.equal_range(coarse);
    for (auto it = lo; it != hi; ++it) {
      if (g.equal(s.elems[it->second], y)) return true;
    }
    return false;
  }

  Sphere expand_pairwise() {
    Sphere next;
    std::size_t i = 0;
    for (const Element& x : cur_.elems) {
      for (const Element& s : gens_) {
        Element y = g_.mul(x, s);
        ++products_;
        ByteKey coarse = g_.coarse_key(y);
        if (in_bucket(g_, prev_, coarse, y) || in_bucket(g_, cur_, coarse, y) || in_bucket(g_, next, coarse, y)) {
          continue;
        }
        add(next, std::move(y), std::move(coarse));
      }
      if ((++i & 255) == 0 && deadline_.expired()) {
        aborted_ = true;
        return {};
      }
    }
    return next;
  }

  const Group& g_;
  const std::vector<Element>& gens_;
  bool pairwise_;
  unsigned workers_;
  const Deadline& deadline_;
  Sphere prev_;
  Sphere cur_;
  std::uint64_t products_ = 0;
  bool aborted_ = false;
};

void enumerate(const Group& g, int kmax, const EnumerationOptions& options, bool pairwise, GrowthTable& t) {
  const Deadline deadline(options.budget.max_seconds);
  t.gamma = {1};
  t.sigma = {1};
  t.complete = true;
  BallExplorer explorer(g, t.gens.elements, pairwise, options.workers, deadline);
  for (int k = 1; k <= kmax; ++k) {
    if (!explorer.advance()) {
      t.complete = false;
      break;
    }
    const std::uint64_t size = explorer.sphere().size();
    const std::uint64_t total = t.gamma.back() + size;
    if (options.budget.max_elements != 0 && total > options.budget.max_elements) {
      t.complete = false;
      break;
    }
    t.gamma.push_back(total);
    t.sigma.push_back(size);
  }
  t.budget_used = {t.gamma.back(), explorer.products(), deadline.elapsed()};
}

}  // namespace

GrowthTable growth_table(const Group& g, const GeneratingSet& gens, int kmax, EnumerationOptions options) {
  if (kmax < 0) throw PreconditionViolation("kmax must be >= 0");
  GrowthTable t;
  t.spec = g.spec();
  t.gens = symmetrize(g, gens.elements);
  t.kmax = kmax;
  try {
    enumerate(g, kmax, options, false, t);
  } catch (const ClosureBudgetExceeded&) {
    enumerate(g, kmax, options, true, t);
    t.slow_path = true;
  }
  return t;
}

std::string to_string(Generation g) {
  switch (g) {
    case Generation::yes:
      return "true";
    case Generation::no:
      return "false";
    case Generation::unknown:
      return "unknown";
  }
  return "unknown";
}

Generation is_generating(const Group& g, const GeneratingSet& gens, int radius_cap) {
  const std::vector<Element> targets = g.default_generators().elements;
  std::vector<bool> reached(targets.size(), false);
  std::size_t remaining = targets.size();
  const GeneratingSet sym = symmetrize(g, gens.elements);
  const Deadline none(0);

  auto scan = [&](const std::vector<Element>& sphere) {
    for (const Element& e : sphere) {
      for (std::size_t i = 0; i < targets.size(); ++i) {
        if (!reached[i] && g.equal(e, targets[i])) {
          reached[i] = true;
          --remaining;
        }
      }
    }
  };

  auto run = [&](bool pairwise) {
    BallExplorer explorer(g, sym.elements, pairwise, 1, none);
    for (int k = 1; k <= radius_cap && remaining > 0; ++k) {
      explorer.advance();
      if (explorer.sphere().empty()) return Generation::no;
      scan(explorer.sphere());
    }
    return remaining == 0 ? Generation::yes : Generation::unknown;
  };

  if (remaining == 0) return Generation::yes;
  try {
    return run(false);
  } catch (const ClosureBudgetExceeded&) {
    std::fill(reached.begin(), reached.end(), false);
    remaining = targets.size();
    return run(true);
  }
}

SearchReport search_generating_sets(const Group& g, int candidate_radius, int set_size, int k, SearchBudget budget) {
  if (set_size < 1) throw PreconditionViolation("set_size must be >= 1");
  if (k < 1) throw PreconditionViolation("k must be >= 1");
  if (candidate_radius < 1) throw PreconditionViolation("candidate_radius must be >= 1");

  // Candidate pool: the non-identity elements of the default-generator ball.
  std::vector<std::pair<ByteKey, Element>> pool;
  {
    const Deadline none(0);
    const GeneratingSet defaults = g.default_generators();
    BallExplorer explorer(g, defaults.elements, false, 1, none);
    for (int r = 1; r <= candidate_radius; ++r) {
      explorer.advance();
      const auto& sphere = explorer.sphere();
      const auto& keys = explorer.sphere_keys();
      for (std::size_t i = 0; i < sphere.size(); ++i) pool.emplace_back(keys[i], sphere[i]);
    }
  }
  std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  SearchReport report;
  report.k = k;
  const auto n = pool.size();
  const auto size = static_cast<std::size_t>(set_size);
  if (size > n) return report;

  std::set<std::vector<ByteKey>> seen_sets;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  bool have_best = false;
  for (;;) {
    std::vector<Element> chosen;
    chosen.reserve(size);
    for (std::size_t i : idx) chosen.push_back(pool[i].second);
    GeneratingSet sym = symmetrize(g, chosen);
    std::vector<ByteKey> signature;
    for (const Element& e : sym.elements) signature.push_back(g.canonical_key(e));
    std::sort(signature.begin(), signature.end());

    if (!seen_sets.insert(signature).second) {
      ++report.skipped_duplicates;
    } else if (is_generating(g, sym, budget.radius_cap) != Generation::yes) {
      ++report.skipped_not_generating;
    } else if (budget.max_candidates != 0 && report.candidates_tested >= budget.max_candidates) {
      report.complete = false;
      break;
    } else {
      ++report.candidates_tested;
      const GrowthTable t = growth_table(g, sym, k, {budget.per_table, 1});
      SearchCandidate c{sym, t.gamma.back(), 0, t.complete};
      if (t.complete) {
        c.root_bound = kth_root(t.gamma[static_cast<std::size_t>(k)], k);
        if (!have_best || c.root_bound < report.best_root_bound) {
          report.best_root_bound = c.root_bound;
          report.best_set = sym;
          have_best = true;
        }
      } else {
        report.complete = false;
      }
      report.candidates.push_back(std::move(c));
    }

    // Next combination in lexicographic index order.
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return report;
}

}  // namespace growth
