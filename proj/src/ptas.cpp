#include "ptas.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "bisection.hpp"
#include "compositions.hpp"
#include "error.hpp"
#include "parallel.hpp"

namespace divmax {

GuessGrid make_guess_grid(const MetricInstance& inst, std::size_t k) {
  GuessGrid grid;
  const double r = diameter_estimate(inst);
  const double kk = static_cast<double>(k);
  // Nominal range [r/k^2, 2r], widened by one step at each end.
  const double floor_scale = r / (2.0 * kk * kk);
  for (double s = 4.0 * r;; s *= 0.5) {
    grid.scales.push_back(s);
    if (s < floor_scale) break;
  }
  grid.centers.resize(inst.size());
  std::iota(grid.centers.begin(), grid.centers.end(), PointIndex{0});
  return grid;
}

double cluster_radius_factor(Objective obj) {
  switch (obj) {
    case Objective::kClique:
      return 2.0;
    case Objective::kStar:
      return 4.0;
    case Objective::kBipartition:
      return 6.0;
  }
  return 6.0;
}

double rounding_delta(double eps, double q) {
  return eps / std::pow(2.0, q + 3.0);
}

double evaluate_rounded(const MetricInstance& inst, Objective obj,
                        const CellDecomposition& decomp,
                        std::span<const PointIndex> outliers,
                        const MultiplicityVector& mv, const EvalOptions& opts) {
  for (PointIndex c : mv.centers) {
    const std::size_t slot = decomp.cell_of_point(c);
    require(slot != CellDecomposition::kNoCell && decomp.centers[slot] == c,
            "multiplicity vector refers to a point that is not a cell center");
  }
  MultiplicityVector all = mv;
  for (PointIndex p : outliers) {
    all.centers.push_back(p);
    all.mult.push_back(1);
  }
  return value_on_multiset(inst, obj, all, opts);
}

namespace {

// One rounded search problem: a guess after deduplication.
struct Problem {
  GuessProvenance guess;
  std::vector<PointIndex> outliers;
  std::vector<PointIndex> centers;
  std::vector<std::size_t> caps;
  // First caps[c] members of each cell, ascending; the pre-image source.
  std::vector<std::vector<PointIndex>> pool;
  std::size_t free = 0;
};

struct ProblemResult {
  bool found = false;
  std::vector<PointIndex> subset;
  double value = -std::numeric_limits<double>::infinity();
  bool approximate_oracle = false;
};

std::vector<std::size_t> problem_key(const Problem& p) {
  std::vector<std::size_t> key;
  key.push_back(p.outliers.size());
  key.insert(key.end(), p.outliers.begin(), p.outliers.end());
  for (const auto& cell : p.pool) {
    key.push_back(cell.size());
    key.insert(key.end(), cell.begin(), cell.end());
  }
  return key;
}

ProblemResult run_problem(const MetricInstance& inst, Objective obj,
                          std::size_t k, double eps, const Problem& p,
                          const SolveOptions& opts) {
  const std::size_t cells = p.centers.size();
  std::vector<PointIndex> all_centers = p.centers;
  all_centers.insert(all_centers.end(), p.outliers.begin(), p.outliers.end());
  const CenterTable table(inst, all_centers);
  std::vector<std::size_t> mult(all_centers.size(), 1);

  EvalOptions eval;
  eval.bisection_eps = eps;
  eval.budget = opts.budget;

  ProblemResult out;
  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best_m;
  for_each_composition(p.caps, p.free, [&](std::span<const std::size_t> m) {
    std::copy(m.begin(), m.end(), mult.begin());
    double v = 0.0;
    switch (obj) {
      case Objective::kClique:
        v = table.clique(mult);
        break;
      case Objective::kStar:
        v = table.star(mult);
        break;
      case Objective::kBipartition: {
        std::size_t distinct = 0;
        for (std::size_t x : mult) distinct += x > 0;
        if (distinct <= kSplitCenterCap) {
          v = table.min_split(mult, opts.budget).value;
        } else {
          std::vector<PointIndex> expanded;
          for (std::size_t i = 0; i < mult.size(); ++i)
            expanded.insert(expanded.end(), mult[i], all_centers[i]);
          v = min_bisection(inst, expanded, eps, opts.budget).value;
          out.approximate_oracle = true;
        }
        break;
      }
    }
    if (v > best) {
      best = v;
      best_m.assign(m.begin(), m.end());
    }
  });
  if (best_m.empty() && cells > 0) return out;

  out.found = true;
  out.subset = p.outliers;
  for (std::size_t c = 0; c < cells; ++c)
    out.subset.insert(out.subset.end(), p.pool[c].begin(),
                      p.pool[c].begin() + static_cast<std::ptrdiff_t>(best_m[c]));
  std::sort(out.subset.begin(), out.subset.end());
  out.value = objective_value(inst, obj, out.subset, eval);
  if (obj == Objective::kBipartition && k > kExactBipartitionCap)
    out.approximate_oracle = true;
  return out;
}

}  // namespace

Solution solve(const MetricInstance& inst, Objective obj, std::size_t k,
               double eps, const SolveOptions& opts) {
  const std::size_t n = inst.size();
  require(k >= 2 && k <= n, "k must satisfy 2 <= k <= n");
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
  if (obj == Objective::kBipartition)
    require(k % 2 == 0, "bipartition needs an even k");

  EvalOptions eval;
  eval.bisection_eps = eps;
  eval.budget = opts.budget;

  Solution sol;
  sol.algo = "ptas";
  sol.guarantee = 1.0 - eps;
  const double r = diameter_estimate(inst);
  if (k == n || r == 0.0) {
    // Whole set, or every point coincides: any k points are optimal.
    sol.subset.resize(k);
    std::iota(sol.subset.begin(), sol.subset.end(), PointIndex{0});
    sol.value = objective_value(inst, obj, sol.subset, eval);
    sol.guarantee = 1.0;
    return sol;
  }

  const GuessGrid grid = make_guess_grid(inst, k);
  // Enlarged radius factor c' = c / (1 - lambda) with lambda = 1/2.
  const double reach = 2.0 * cluster_radius_factor(obj);
  const double delta = rounding_delta(eps, inst.q());

  std::vector<Problem> problems;
  std::map<std::vector<std::size_t>, std::size_t> seen;
  std::vector<PointIndex> ball;
  std::vector<PointIndex> outliers;
  for (double scale : grid.scales) {
    for (PointIndex z : grid.centers) {
      ball.clear();
      outliers.clear();
      for (PointIndex v = 0; v < n; ++v) {
        if (within(inst.dist(z, v), reach * scale))
          ball.push_back(v);
        else
          outliers.push_back(v);
      }
      if (outliers.size() > k) continue;
      const CellDecomposition decomp = decompose_fixed(inst, ball, delta * scale);
      Problem p;
      p.guess = {z, scale};
      p.outliers = outliers;
      p.free = k - outliers.size();
      for (std::size_t c = 0; c < decomp.cell_count(); ++c) {
        const std::size_t cap = std::min(decomp.cell_size(c), k);
        p.centers.push_back(decomp.centers[c]);
        p.caps.push_back(cap);
        std::vector<PointIndex> members;
        for (std::size_t i = 0; i < cap; ++i)
          members.push_back(decomp.members[decomp.cell_members[c][i]]);
        p.pool.push_back(std::move(members));
      }
      if (seen.emplace(problem_key(p), problems.size()).second)
        problems.push_back(std::move(p));
    }
  }

  std::uint64_t total = 0;
  for (const Problem& p : problems)
    total = saturating_add(total, count_compositions(p.caps, p.free));
  if (total > opts.budget) {
    fail(ErrorCode::kBudgetExceeded,
         "rounded search needs " +
             (total == kSaturated ? std::string("more than 2^64")
                                  : std::to_string(total)) +
             " candidates, budget is " + std::to_string(opts.budget));
  }

  std::vector<ProblemResult> results(problems.size());
  parallel_for(problems.size(), opts.threads, [&](std::size_t i) {
    results[i] = run_problem(inst, obj, k, eps, problems[i], opts);
  });

  // Guess order (scales descending, centers ascending); first maximum wins.
  std::size_t winner = problems.size();
  bool approximate = false;
  for (std::size_t i = 0; i < results.size(); ++i) {
    approximate = approximate || results[i].approximate_oracle;
    if (!results[i].found) continue;
    if (winner == problems.size() || results[i].value > results[winner].value)
      winner = i;
  }
  if (winner == problems.size())
    fail(ErrorCode::kLogic, "no guess produced a feasible k-set");

  sol.subset = std::move(results[winner].subset);
  sol.value = results[winner].value;
  sol.guess = problems[winner].guess;
  sol.candidates = total;
  sol.cells = problems[winner].centers.size() + problems[winner].outliers.size();
  if (approximate) sol.guarantee = (1.0 - eps) / (1.0 + eps);
  return sol;
}

}  // namespace divmax
