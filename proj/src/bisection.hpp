#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "diversity.hpp"
#include "metric.hpp"

namespace divmax {

struct BisectionResult {
  std::vector<PointIndex> left;   // k/2 points (multiset), sorted
  std::vector<PointIndex> right;  // the complement in T, sorted
  double value = 0.0;             // f(left, right), re-evaluated pairwise
  std::size_t cells_used = 0;
  std::uint64_t candidates = 0;
  // Provenance.
  PointIndex star_center = 0;
  double delta_estimate = 0.0;  // Delta'
  double delta = 0.0;           // cell radius factor
  double grid_step = 0.0;       // delta' of the multiplicity grid
};

// Star center of T with its weight; lowest index on ties.
StarValue star_center(const MetricInstance& inst,
                      std::span<const PointIndex> points);

// Delta' = cl^q(T) * 4 / (k^2 (2^q + 1)); satisfies
// Delta^{1/q} / 2 <= Delta'^{1/q} <= Delta^{1/q} for Delta = 4 bp^q(T) / k^2
// and k >= 4.
double bisection_delta_estimate(const MetricInstance& inst,
                                std::span<const PointIndex> points);

// Cell radius factor eps / 2^{q+4} and grid spacing eps / (8 (2^q + 1)).
double bisection_cell_delta(double eps, double q);
double bisection_grid_delta(double eps, double q);

// Multiplicity grid for one cell: 0, s, 2s, ... <= size, s = grid_step(size).
std::size_t bisection_grid_step(std::size_t cell_size, double grid_delta);

// (1+eps)-approximate minimum balanced cut of the multiset T (indices may
// repeat) under q-th power distances.
BisectionResult min_bisection(const MetricInstance& inst,
                              std::span<const PointIndex> points, double eps,
                              std::uint64_t budget = kDefaultBudget);

}  // namespace divmax
