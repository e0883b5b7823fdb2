#include "baselines.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "error.hpp"
#include "parallel.hpp"

namespace divmax {
namespace {

void check_k(const MetricInstance& inst, std::size_t k) {
  require(k >= 2, "k must be >= 2");
  require(k <= inst.size(), "k = " + std::to_string(k) +
                                " exceeds the number of points (" +
                                std::to_string(inst.size()) + ")");
}

struct Best {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<PointIndex> subset;
};

}  // namespace

Solution brute_force_opt(const MetricInstance& inst, Objective obj,
                         std::size_t k, const SolveOptions& opts) {
  check_k(inst, k);
  const std::size_t n = inst.size();
  if (obj == Objective::kBipartition) {
    require(k % 2 == 0, "bipartition needs an even k");
    if (k > kExactBipartitionCap) {
      fail(ErrorCode::kCapExceeded,
           "brute force bipartition limited to k <= " +
               std::to_string(kExactBipartitionCap));
    }
  }
  const std::uint64_t total = binomial(n, k);
  if (total > opts.enumeration_cap) {
    fail(ErrorCode::kCapExceeded,
         "C(" + std::to_string(n) + "," + std::to_string(k) +
             ") subsets exceed the enumeration cap of " +
             std::to_string(opts.enumeration_cap));
  }

  // Contiguous rank ranges; each chunk keeps its lexicographically first
  // maximum, and the ordered reduction below reproduces the serial winner.
  const std::uint64_t chunk_size = 4096;
  const std::size_t chunks =
      static_cast<std::size_t>((total + chunk_size - 1) / chunk_size);
  std::vector<Best> results(chunks);
  parallel_for(chunks, opts.threads, [&](std::size_t c) {
    const std::uint64_t begin = c * chunk_size;
    const std::uint64_t end = std::min(total, begin + chunk_size);
    std::vector<std::size_t> comb = unrank_combination(n, k, begin);
    Best best;
    for (std::uint64_t r = begin; r < end; ++r) {
      const double v = objective_value(inst, obj, comb);
      if (v > best.value) {
        best.value = v;
        best.subset.assign(comb.begin(), comb.end());
      }
      if (r + 1 < end) next_combination(comb, n);
    }
    results[c] = std::move(best);
  });

  Best best;
  for (Best& r : results)
    if (r.value > best.value) best = std::move(r);

  Solution sol;
  sol.subset = std::move(best.subset);
  sol.value = best.value;
  sol.algo = "brute";
  sol.candidates = total;
  return sol;
}

Solution greedy_clique(const MetricInstance& inst, std::size_t k,
                       const SolveOptions& opts) {
  check_k(inst, k);
  const std::size_t n = inst.size();

  auto farthest_from = [&](PointIndex from) {
    PointIndex best = from == 0 ? 1 : 0;
    double best_d = -1.0;
    for (PointIndex v = 0; v < n; ++v) {
      if (v == from) continue;
      const double d = inst.dist(from, v);
      if (d > best_d) {
        best_d = d;
        best = v;
      }
    }
    return best;
  };

  PointIndex a = 0;
  PointIndex b = 0;
  if (opts.exact_farthest_pair) {
    double best_d = -1.0;
    for (PointIndex u = 0; u < n; ++u) {
      for (PointIndex v = u + 1; v < n; ++v) {
        const double d = inst.dist(u, v);
        if (d > best_d) {
          best_d = d;
          a = u;
          b = v;
        }
      }
    }
  } else {
    // Double scan: farthest from point 0 (point 0 itself only if every
    // point coincides with it), then farthest from that.
    double best_d = 0.0;
    for (PointIndex v = 1; v < n; ++v) {
      const double d = inst.dist(0, v);
      if (d > best_d) {
        best_d = d;
        a = v;
      }
    }
    b = farthest_from(a);
  }

  std::vector<char> chosen(n, 0);
  std::vector<double> gain(n, 0.0);  // sum of d^q to the chosen set
  std::vector<PointIndex> subset;
  auto add = [&](PointIndex p) {
    chosen[p] = 1;
    subset.push_back(p);
    for (PointIndex v = 0; v < n; ++v)
      if (!chosen[v]) gain[v] += inst.dist_pow(p, v);
  };
  add(std::min(a, b));
  add(std::max(a, b));
  while (subset.size() < k) {
    PointIndex best = n;
    for (PointIndex v = 0; v < n; ++v) {
      if (chosen[v]) continue;
      if (best == n || gain[v] > gain[best]) best = v;
    }
    add(best);
  }

  Solution sol;
  std::sort(subset.begin(), subset.end());
  sol.value = clique_value(inst, subset);
  sol.subset = std::move(subset);
  sol.algo = "greedy";
  // The factor 1/2 holds for metric distances only.
  sol.guarantee = inst.q() == 1.0 ? 0.5 : 0.0;
  return sol;
}

double estimate_delta_clique(const MetricInstance& inst, std::size_t k,
                             const SolveOptions& opts) {
  require(inst.q() == 1.0, "the clique Delta estimate is defined for q = 1");
  const Solution sol = greedy_clique(inst, k, opts);
  return sol.value / term_count(Objective::kClique, k);
}

}  // namespace divmax
