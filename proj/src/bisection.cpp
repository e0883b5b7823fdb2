#include "bisection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cells.hpp"
#include "combinatorics.hpp"
#include "error.hpp"

namespace divmax {

StarValue star_center(const MetricInstance& inst,
                      std::span<const PointIndex> points) {
  return star_value(inst, points);
}

double bisection_delta_estimate(const MetricInstance& inst,
                                std::span<const PointIndex> points) {
  const double k = static_cast<double>(points.size());
  return clique_value(inst, points) * 4.0 / (k * k) /
         (std::pow(2.0, inst.q()) + 1.0);
}

double bisection_cell_delta(double eps, double q) {
  return eps / std::pow(2.0, q + 4.0);
}

double bisection_grid_delta(double eps, double q) {
  return eps / (8.0 * (std::pow(2.0, q) + 1.0));
}

std::size_t bisection_grid_step(std::size_t cell_size, double grid_delta) {
  const auto step = static_cast<std::size_t>(
      std::floor(grid_delta * static_cast<double>(cell_size)));
  return std::max<std::size_t>(step, 1);
}

namespace {

double cross_sum(const MetricInstance& inst, std::span<const PointIndex> left,
                 std::span<const PointIndex> right) {
  double sum = 0.0;
  for (PointIndex l : left)
    for (PointIndex r : right) sum += inst.dist_pow(l, r);
  return sum;
}

BisectionResult trivial_split(const MetricInstance& inst,
                              std::span<const PointIndex> points) {
  std::vector<PointIndex> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t half = sorted.size() / 2;
  BisectionResult out;
  out.left.assign(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(half));
  out.right.assign(sorted.begin() + static_cast<std::ptrdiff_t>(half), sorted.end());
  out.value = cross_sum(inst, out.left, out.right);
  return out;
}

}  // namespace

BisectionResult min_bisection(const MetricInstance& inst,
                              std::span<const PointIndex> points, double eps,
                              std::uint64_t budget) {
  const std::size_t k = points.size();
  require(k >= 2, "bisection needs at least 2 points");
  require(k % 2 == 0, "bisection needs an even number of points, got " +
                          std::to_string(k));
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
  for (PointIndex p : points) (void)inst.dist(p, p);  // index check

  const StarValue star = star_center(inst, points);
  const double delta_est = k == 2 ? 0.0 : bisection_delta_estimate(inst, points);
  if (k == 2 || delta_est == 0.0) {
    BisectionResult out = trivial_split(inst, points);
    out.star_center = star.center;
    return out;
  }

  const double q = inst.q();
  const double delta = bisection_cell_delta(eps, q);
  const double grid_delta = bisection_grid_delta(eps, q);
  const CellDecomposition decomp = decompose_variable(
      inst, points, star.center, std::pow(delta_est, 1.0 / q), delta);

  const std::size_t cells = decomp.cell_count();
  const std::size_t half = k / 2;
  std::vector<std::size_t> full(cells);
  std::vector<std::size_t> step(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    full[c] = decomp.cell_size(c);
    step[c] = bisection_grid_step(full[c], grid_delta);
  }

  // Grid vectors with sum <= k/2.
  std::uint64_t count = 0;
  {
    std::vector<std::uint64_t> ways(half + 1, 0);
    ways[0] = 1;
    for (std::size_t c = 0; c < cells; ++c) {
      std::vector<std::uint64_t> next(half + 1, 0);
      for (std::size_t s = 0; s <= half; ++s) {
        if (ways[s] == 0) continue;
        for (std::size_t v = 0; v <= full[c] && s + v <= half; v += step[c])
          next[s + v] = saturating_add(next[s + v], ways[s]);
      }
      ways = std::move(next);
    }
    for (std::uint64_t w : ways) count = saturating_add(count, w);
  }
  if (count > budget) {
    fail(ErrorCode::kBudgetExceeded,
         "bisection grid needs " +
             (count == kSaturated ? std::string("more than 2^64")
                                  : std::to_string(count)) +
             " candidates over " + std::to_string(cells) +
             " cells, budget is " + std::to_string(budget));
  }

  const CenterTable table(inst, decomp.centers);
  // f(m, M - m) = m.W - m.D.m with W = D M.
  std::vector<double> w(cells, 0.0);
  for (std::size_t i = 0; i < cells; ++i)
    for (std::size_t j = 0; j < cells; ++j)
      w[i] += static_cast<double>(full[j]) * table.at(i, j);

  std::vector<std::size_t> g(cells, 0);
  std::vector<std::size_t> m(cells, 0);
  std::vector<std::size_t> best_m;
  double best = std::numeric_limits<double>::infinity();
  auto visit = [&](std::size_t sum) {
    std::size_t missing = half - sum;
    for (std::size_t i = 0; i < cells; ++i) {
      const std::size_t add = std::min({step[i], full[i] - g[i], missing});
      m[i] = g[i] + add;
      missing -= add;
    }
    if (missing > 0) return;
    double v = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
      if (m[i] == 0) continue;
      double inner = 0.0;
      for (std::size_t j = 0; j < cells; ++j)
        inner += static_cast<double>(m[j]) * table.at(i, j);
      v += static_cast<double>(m[i]) * (w[i] - inner);
    }
    if (v < best || (v == best && m < best_m)) {
      best = v;
      best_m = m;
    }
  };
  auto recurse = [&](auto&& self, std::size_t i, std::size_t sum) -> void {
    if (i == cells) {
      visit(sum);
      return;
    }
    for (std::size_t v = 0; v <= full[i] && sum + v <= half; v += step[i]) {
      g[i] = v;
      self(self, i + 1, sum + v);
    }
    g[i] = 0;
  };
  recurse(recurse, 0, 0);
  if (best_m.empty())
    fail(ErrorCode::kLogic, "bisection grid produced no balanced vector");

  BisectionResult out;
  for (std::size_t c = 0; c < cells; ++c) {
    const auto& members = decomp.cell_members[c];
    for (std::size_t j = 0; j < members.size(); ++j)
      (j < best_m[c] ? out.left : out.right).push_back(decomp.members[members[j]]);
  }
  std::sort(out.left.begin(), out.left.end());
  std::sort(out.right.begin(), out.right.end());
  out.value = cross_sum(inst, out.left, out.right);
  out.cells_used = cells;
  out.candidates = count;
  out.star_center = star.center;
  out.delta_estimate = delta_est;
  out.delta = delta;
  out.grid_step = grid_delta;
  return out;
}

}  // namespace divmax
