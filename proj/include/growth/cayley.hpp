#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "growth/groups.hpp"

namespace growth {

struct Budget {
  std::uint64_t max_elements = 0;  // 0: unlimited
  double max_seconds = 0;          // 0: unlimited
};

struct EnumerationOptions {
  Budget budget;
  unsigned workers = 1;
};

struct BudgetUsage {
  std::uint64_t elements = 0;  // ball elements discovered
  std::uint64_t products = 0;  // element x generator products formed
  double seconds = 0;
};

/// gamma[k] = |ball of radius k|, sigma[k] = gamma[k] - gamma[k-1] (sigma[0] = 1).
/// When `complete` is false the table covers radii 0..gamma.size()-1 only.
struct GrowthTable {
  GroupSpec spec;
  GeneratingSet gens;
  int kmax = 0;  // requested radius
  std::vector<std::uint64_t> gamma;
  std::vector<std::uint64_t> sigma;
  bool complete = true;
  bool slow_path = false;  // pairwise-equality dedupe was used
  BudgetUsage budget_used;

  int radius() const { return static_cast<int>(gamma.size()) - 1; }
};

/// Exact ball counts by frontier BFS. S is symmetrized first; the table
/// records the symmetrized set. Budget exhaustion truncates the table to the
/// last finished sphere and clears `complete`.
GrowthTable growth_table(const Group& g, const GeneratingSet& gens, int kmax, EnumerationOptions options = {});

enum class Generation { yes, no, unknown };

std::string to_string(Generation g);

/// yes when every default generator lies in the S-ball of radius_cap; no only
/// when the S-ball is exhausted (finite subgroup) without reaching them.
Generation is_generating(const Group& g, const GeneratingSet& gens, int radius_cap);

struct SearchBudget {
  std::size_t max_candidates = 0;  // tables computed; 0: unlimited
  int radius_cap = 10;             // for the generation check
  Budget per_table;
};

struct SearchCandidate {
  GeneratingSet set;
  std::uint64_t gamma = 0;
  double root_bound = 0;  // gamma^(1/k)
  bool complete = true;
};

/// The minimum reported here only bounds omega(G) from above.
struct SearchReport {
  int k = 0;
  std::size_t candidates_tested = 0;
  std::size_t skipped_duplicates = 0;
  std::size_t skipped_not_generating = 0;
  GeneratingSet best_set;
  double best_root_bound = 0;
  std::vector<SearchCandidate> candidates;
  bool complete = true;
};

SearchReport search_generating_sets(const Group& g, int candidate_radius, int set_size, int k,
                                    SearchBudget budget = {});

}  // namespace growth
