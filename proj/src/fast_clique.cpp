#include "fast_clique.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "baselines.hpp"
#include "combinatorics.hpp"
#include "diversity.hpp"
#include "error.hpp"

namespace divmax {

std::vector<std::size_t> multiplicity_ladder(std::size_t cell_size,
                                             std::size_t k, double eps) {
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
  std::vector<std::size_t> ladder;
  std::size_t m = std::min(cell_size, k);
  ladder.push_back(m);
  while (m > 0) {
    // Guard the ceiling against products like 0.75 * 4 = 3.0000000000000004.
    const double shrunk = (1.0 - eps / 2.0) * static_cast<double>(m);
    const auto ceil = static_cast<std::size_t>(std::ceil(shrunk - 1e-9));
    m = std::min(ceil, m - 1);
    ladder.push_back(m);
  }
  return ladder;
}

std::optional<PointIndex> find_center(const MetricInstance& inst,
                                      const CellDecomposition& decomp,
                                      double radius, std::size_t k) {
  // |outside| < k/2  <=>  2 |outside| < k.
  for (PointIndex c : decomp.centers) {
    std::size_t outside = 0;
    bool ok = true;
    for (PointIndex v = 0; v < inst.size(); ++v) {
      if (!within(inst.dist(c, v), radius) && 2 * ++outside >= k) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  return std::nullopt;
}

CliqueMultiplicityEvaluator::CliqueMultiplicityEvaluator(
    const MetricInstance& inst, std::span<const PointIndex> inner,
    std::span<const PointIndex> outer, std::span<const std::size_t> outer_mult)
    : n_(inner.size()), table_(n_ * n_, 0.0), outer_sum_(n_, 0.0) {
  require(outer.size() == outer_mult.size(),
          "outer centers and multiplicities differ in length");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double d = inst.dist_pow(inner[i], inner[j]);
      table_[i * n_ + j] = d;
      table_[j * n_ + i] = d;
    }
    for (std::size_t j = 0; j < outer.size(); ++j)
      outer_sum_[i] += static_cast<double>(outer_mult[j]) *
                       inst.dist_pow(inner[i], outer[j]);
  }
  for (std::size_t i = 0; i < outer.size(); ++i)
    for (std::size_t j = i + 1; j < outer.size(); ++j)
      fixed_ += static_cast<double>(outer_mult[i] * outer_mult[j]) *
                inst.dist_pow(outer[i], outer[j]);
}

double CliqueMultiplicityEvaluator::value(
    std::span<const std::size_t> m) const {
  double sum = fixed_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (m[i] == 0) continue;
    double row = outer_sum_[i];
    for (std::size_t j = i + 1; j < n_; ++j)
      row += static_cast<double>(m[j]) * table_[i * n_ + j];
    sum += static_cast<double>(m[i]) * row;
  }
  return sum;
}

namespace {

// Ladder vectors with sum <= limit, saturating.
std::uint64_t count_ladder_vectors(
    const std::vector<std::vector<std::size_t>>& ladders, std::size_t limit) {
  std::vector<std::uint64_t> ways(limit + 1, 0);
  ways[0] = 1;
  for (const auto& ladder : ladders) {
    std::vector<std::uint64_t> next(limit + 1, 0);
    for (std::size_t s = 0; s <= limit; ++s) {
      if (ways[s] == 0) continue;
      for (std::size_t v : ladder)
        if (s + v <= limit) next[s + v] = saturating_add(next[s + v], ways[s]);
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t w : ways) total = saturating_add(total, w);
  return total;
}

}  // namespace

Solution solve_fast(const MetricInstance& inst, std::size_t k, double eps,
                    const SolveOptions& opts) {
  const std::size_t n = inst.size();
  require(inst.q() == 1.0, "fast clique scheme requires q = 1");
  require(k >= 2 && k <= n, "k must satisfy 2 <= k <= n");
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");

  Solution sol;
  sol.algo = "fast-clique";
  sol.guarantee = std::max(0.0, 1.0 - 8.0 * eps);

  const double delta_est = k == n ? 0.0 : estimate_delta_clique(inst, k, opts);
  if (k == n || delta_est == 0.0) {
    // Whole set, or all points coincide.
    sol.subset.resize(k);
    std::iota(sol.subset.begin(), sol.subset.end(), PointIndex{0});
    sol.value = clique_value(inst, sol.subset);
    sol.guarantee = 1.0;
    return sol;
  }

  const double delta = eps / 8.0;
  std::vector<PointIndex> all(n);
  std::iota(all.begin(), all.end(), PointIndex{0});
  const CellDecomposition decomp = decompose_fixed(inst, all, delta * delta_est);

  const std::optional<PointIndex> z = find_center(inst, decomp, 5.0 * delta_est, k);
  if (!z) {
    fail(ErrorCode::kLogic,
         "no cell center leaves fewer than k/2 points outside radius 5*Delta'");
  }

  // Whole cells meeting B(z, 13 Delta') form the searched region.
  const std::size_t cells = decomp.cell_count();
  std::vector<char> inner_cell(cells, 0);
  for (std::size_t i = 0; i < decomp.members.size(); ++i)
    if (within(inst.dist(*z, decomp.members[i]), 13.0 * delta_est))
      inner_cell[decomp.cell[i]] = 1;

  std::vector<std::size_t> inner_slots;
  std::vector<PointIndex> inner;
  std::vector<PointIndex> outer;
  std::vector<std::size_t> outer_mult;
  std::size_t fixed_count = 0;
  for (std::size_t c = 0; c < cells; ++c) {
    if (inner_cell[c]) {
      inner_slots.push_back(c);
      inner.push_back(decomp.centers[c]);
    } else {
      outer.push_back(decomp.centers[c]);
      outer_mult.push_back(decomp.cell_size(c));
      fixed_count += decomp.cell_size(c);
    }
  }
  if (fixed_count > k) {
    fail(ErrorCode::kLogic, std::to_string(fixed_count) +
                                " points outside the searched region exceed k");
  }
  const std::size_t free = k - fixed_count;

  std::vector<std::vector<std::size_t>> ladders;
  std::vector<std::size_t> caps;
  for (std::size_t c : inner_slots) {
    ladders.push_back(multiplicity_ladder(decomp.cell_size(c), k, eps));
    caps.push_back(decomp.cell_size(c));
  }
  const std::uint64_t count = count_ladder_vectors(ladders, free);
  if (count > opts.budget) {
    fail(ErrorCode::kBudgetExceeded,
         "ladder search needs " +
             (count == kSaturated ? std::string("more than 2^64")
                                  : std::to_string(count)) +
             " candidates over " + std::to_string(inner.size()) +
             " cells, budget is " + std::to_string(opts.budget));
  }

  const CliqueMultiplicityEvaluator eval(inst, inner, outer, outer_mult);
  const std::size_t m = inner.size();
  std::vector<std::size_t> g(m, 0);
  std::vector<std::size_t> raised(m, 0);
  std::vector<std::size_t> best_m;
  double best = -std::numeric_limits<double>::infinity();

  auto visit = [&](std::size_t sum) {
    // Raise entries in center order, never past the cell size.
    std::size_t missing = free - sum;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t add = std::min(caps[i] - g[i], missing);
      raised[i] = g[i] + add;
      missing -= add;
    }
    if (missing > 0) return;
    const double v = eval.value(raised);
    if (v > best) {
      best = v;
      best_m = raised;
    }
  };
  auto recurse = [&](auto&& self, std::size_t i, std::size_t sum) -> void {
    if (i == m) {
      visit(sum);
      return;
    }
    for (std::size_t v : ladders[i]) {
      if (sum + v > free) continue;
      g[i] = v;
      self(self, i + 1, sum + v);
    }
    g[i] = 0;
  };
  recurse(recurse, 0, 0);
  if (best_m.empty() && m > 0)
    fail(ErrorCode::kLogic, "ladder search produced no feasible vector");

  // Pre-image: all outer points plus the lowest-index members of each cell.
  for (std::size_t c = 0; c < cells; ++c) {
    if (inner_cell[c]) continue;
    for (std::size_t pos : decomp.cell_members[c])
      sol.subset.push_back(decomp.members[pos]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto& members = decomp.cell_members[inner_slots[i]];
    for (std::size_t j = 0; j < best_m[i]; ++j)
      sol.subset.push_back(decomp.members[members[j]]);
  }
  std::sort(sol.subset.begin(), sol.subset.end());
  sol.value = clique_value(inst, sol.subset);
  sol.guess = GuessProvenance{*z, delta_est};
  sol.candidates = count;
  sol.cells = cells;
  return sol;
}

}  // namespace divmax
