#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cells.hpp"
#include "diversity.hpp"
#include "metric.hpp"
#include "solution.hpp"

namespace divmax {

// Candidate (Delta^{1/q}, instance center) pairs tried by `solve`. Scales
// descend by factor 1/2 from 4*r to below r/(2k^2), r the diameter estimate,
// so every value in [r/k^2, 2r] has a candidate within a factor 2 below it.
struct GuessGrid {
  std::vector<double> scales;
  std::vector<PointIndex> centers;
};

GuessGrid make_guess_grid(const MetricInstance& inst, std::size_t k);

// Radius factor c of the main cluster B(z0, c * Delta^{1/q}): 2, 4 and 6 for
// clique, star and bipartition.
double cluster_radius_factor(Objective obj);

// Cell radius factor eps / 2^{q+3}, which makes the rounding loss at most
// eps * OPT.
double rounding_delta(double eps, double q);

// Objective of the multiset `mv` (over centers of `decomp`) joined with the
// outliers as singleton cells.
double evaluate_rounded(const MetricInstance& inst, Objective obj,
                        const CellDecomposition& decomp,
                        std::span<const PointIndex> outliers,
                        const MultiplicityVector& mv,
                        const EvalOptions& opts = {});

// Approximation scheme for all three objectives and any q >= 1: for each
// guess, keep the points outside an enlarged main cluster, grid-round the
// cluster and search all rounded completions exhaustively.
Solution solve(const MetricInstance& inst, Objective obj, std::size_t k,
               double eps, const SolveOptions& opts = {});

}  // namespace divmax
