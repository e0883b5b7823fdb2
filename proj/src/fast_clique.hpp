#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cells.hpp"
#include "metric.hpp"
#include "solution.hpp"

namespace divmax {

// Geometric multiplicity ladder (m0, m1, ..., 1, 0) with m0 = min(size, k)
// and m_i = min(ceil((1 - eps/2) m_{i-1}), m_{i-1} - 1).
std::vector<std::size_t> multiplicity_ladder(std::size_t cell_size,
                                             std::size_t k, double eps);

// First center, in creation order, whose ball of `radius` leaves fewer than
// k/2 points outside. Counts are exact.
std::optional<PointIndex> find_center(const MetricInstance& inst,
                                      const CellDecomposition& decomp,
                                      double radius, std::size_t k);

// cl(m) over the centers of the searched region given fixed multiplicities
// on the outer centers. The outer-outer term and the outer contribution S_u
// to each inner center are computed once, so one evaluation costs
// O(|inner|^2) independent of the outer size.
class CliqueMultiplicityEvaluator {
 public:
  CliqueMultiplicityEvaluator(const MetricInstance& inst,
                              std::span<const PointIndex> inner,
                              std::span<const PointIndex> outer,
                              std::span<const std::size_t> outer_mult);

  double value(std::span<const std::size_t> inner_mult) const;
  double fixed_term() const { return fixed_; }

 private:
  std::size_t n_;
  std::vector<double> table_;
  std::vector<double> outer_sum_;
  double fixed_ = 0.0;
};

// Near-linear scheme for remote-clique with q = 1. Value is at least
// (1 - 8 eps) OPT; reported in Solution::guarantee.
Solution solve_fast(const MetricInstance& inst, std::size_t k, double eps,
                    const SolveOptions& opts = {});

}  // namespace divmax
