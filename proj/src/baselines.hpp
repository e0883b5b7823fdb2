#pragma once

#include <cstddef>

#include "diversity.hpp"
#include "metric.hpp"
#include "solution.hpp"

namespace divmax {

// Exact optimum over all k-subsets; ties go to the lexicographically
// smallest subset. Enumeration may be split across threads.
Solution brute_force_opt(const MetricInstance& inst, Objective obj,
                         std::size_t k, const SolveOptions& opts = {});

// Classic greedy for remote-clique on q-th power distances: start from a
// (near-)farthest pair, then repeatedly add the point with the largest
// distance sum to the chosen set.
Solution greedy_clique(const MetricInstance& inst, std::size_t k,
                       const SolveOptions& opts = {});

// Greedy clique value over C(k,2); within [Delta/2, Delta] for q = 1.
double estimate_delta_clique(const MetricInstance& inst, std::size_t k,
                             const SolveOptions& opts = {});

}  // namespace divmax
