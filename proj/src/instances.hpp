#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "metric.hpp"

namespace divmax {

// n points uniform in [0,1]^D under l2. Coordinates depend only on the seed.
MetricInstance gen_uniform(std::size_t n, std::size_t dim, std::uint64_t seed);

// n_cluster points uniform in the l2 ball of `radius` at the origin, followed
// by the outliers (each `dim` coordinates, row-major) in the given order.
MetricInstance gen_clustered(std::size_t n_cluster, double radius,
                             const std::vector<double>& outliers,
                             std::size_t dim, std::uint64_t seed);

// (1,2)-metric of a graph: distance 2 across edges, 1 between other pairs.
// `adjacency` is n x n row-major, nonzero meaning an edge.
MetricInstance gen_graph_12metric(const std::vector<std::uint8_t>& adjacency,
                                  std::size_t n, bool validate = true);

struct KSumInstance {
  std::vector<std::int64_t> values;
  std::size_t k = 2;   // K, size of the sought zero-sum subset
  std::int64_t t = 1;  // every |value| <= t
};

void validate_ksum(const KSumInstance& ks);

// 2|M| unit vectors in R^3: first l_m = (-sqrt(1 - m'^2), m', 0) for every m
// in order, then r_m = (sqrt(1 - m'^2), 0, m'), with m' = m / (t sqrt(K)).
// Under squared l2 distances a 2K-set has clique value (2K)^2 exactly when
// its centroid is the origin.
MetricInstance gen_ksum_reduction(const KSumInstance& ks);

struct ReductionVerdict {
  bool zero_sum_exists = false;
  double max_value = 0.0;    // max cl^2 over all 2K-subsets
  double gap_bound = 0.0;    // k^2 (1 - 1/(4 t^2 K^3)), k = 2K
  bool equivalence_ok = false;
  bool gap_ok = false;       // vacuously true when a zero sum exists
  bool ok() const { return equivalence_ok && gap_ok; }
};

// Brute-force check of the reduction: zero-sum K-subset exists iff the best
// 2K-subset reaches (2K)^2, and otherwise the best stays below the gap bound.
ReductionVerdict verify_reduction(const KSumInstance& ks,
                                  const MetricInstance& inst,
                                  std::uint64_t enumeration_cap = 2'000'000);

}  // namespace divmax
