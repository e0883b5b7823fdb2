#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diversity.hpp"
#include "metric.hpp"

namespace divmax {

// Which (center, scale) guess of the generic scheme produced a solution.
struct GuessProvenance {
  PointIndex center = 0;
  double scale = 0.0;  // candidate for Delta^{1/q}
};

struct Solution {
  std::vector<PointIndex> subset;  // sorted ascending
  double value = 0.0;              // objective re-evaluated on `subset`
  std::string algo;
  std::optional<GuessProvenance> guess;
  // Proven lower bound on value / OPT for this run (1 for exact solvers).
  double guarantee = 1.0;
  std::uint64_t candidates = 0;  // vectors or subsets evaluated
  std::size_t cells = 0;         // cells in the winning decomposition
};

struct SolveOptions {
  // Cap on rounded candidates (multiplicity vectors) per run.
  std::uint64_t budget = kDefaultBudget;
  // Cap on subsets enumerated by brute force.
  std::uint64_t enumeration_cap = 2'000'000;
  // Worker threads; 0 means hardware concurrency. Results never depend on it.
  unsigned threads = 1;
  // Greedy starts from the exact farthest pair (O(n^2)) instead of the
  // double scan from point 0.
  bool exact_farthest_pair = false;
};

}  // namespace divmax
