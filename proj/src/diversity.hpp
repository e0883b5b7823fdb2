#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "metric.hpp"

namespace divmax {

enum class Objective { kClique, kStar, kBipartition };

std::string_view objective_name(Objective obj);
Objective parse_objective(std::string_view name);

// Number of distance terms the objective sums for a k-set: C(k,2), k-1 and
// k^2/4. Dividing an optimum by it gives the average optimal value.
double term_count(Objective obj, std::size_t k);

// Largest subset handed to the exact bipartition oracle (C(15,7) splits).
inline constexpr std::size_t kExactBipartitionCap = 16;
// Largest number of distinct centers for exact multiset split enumeration.
inline constexpr std::size_t kSplitCenterCap = 10;
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// A multiset over cell centers: mult[i] copies of centers[i], pairwise at
// distance zero.
struct MultiplicityVector {
  std::vector<PointIndex> centers;
  std::vector<std::size_t> mult;

  std::size_t total() const;
  // Expanded multiset as a list of point indices with repetition.
  std::vector<PointIndex> expand() const;
};

struct StarValue {
  double value = 0.0;
  PointIndex center = 0;
};

struct BipartitionValue {
  double value = 0.0;
  std::vector<PointIndex> left;
};

// Subsets may repeat a point index; repeats are coincident copies.
double clique_value(const MetricInstance& inst,
                    std::span<const PointIndex> subset);
// Minimum spanning-star weight; ties go to the lowest point index.
StarValue star_value(const MetricInstance& inst,
                     std::span<const PointIndex> subset);
// Exact minimum balanced cut by enumeration. Returns the lexicographically
// smallest minimizing half (as sorted point indices).
BipartitionValue bipartition_value_exact(
    const MetricInstance& inst, std::span<const PointIndex> subset,
    std::size_t cap = kExactBipartitionCap);

struct EvalOptions {
  // Accuracy of the min-bisection approximation used beyond the exact caps.
  double bisection_eps = 0.25;
  std::size_t split_center_cap = kSplitCenterCap;
  std::uint64_t budget = kDefaultBudget;
};

// dv^q(subset). Bipartition is exact up to kExactBipartitionCap points and a
// (1+eps)-approximate upper estimate beyond.
double objective_value(const MetricInstance& inst, Objective obj,
                       std::span<const PointIndex> subset,
                       const EvalOptions& opts = {});

double value_on_multiset(const MetricInstance& inst, Objective obj,
                         const MultiplicityVector& mv,
                         const EvalOptions& opts = {});

// Pairwise d^q between a fixed list of centers; evaluates objectives on
// multiplicity vectors aligned with that list.
class CenterTable {
 public:
  CenterTable(const MetricInstance& inst, std::span<const PointIndex> centers);

  std::size_t size() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }

  double clique(std::span<const std::size_t> m) const;
  double star(std::span<const std::size_t> m) const;
  // f(l, m - l) = sum_{i,j} l_i (m_j - l_j) d^q(i, j).
  double cut(std::span<const std::size_t> left,
             std::span<const std::size_t> m) const;

  struct Split {
    double value = 0.0;
    std::vector<std::size_t> left;
  };
  // Exact minimum over all 0 <= l <= m with |l| = |m|/2. Throws
  // kBudgetExceeded if more than `budget` splits would be enumerated.
  Split min_split(std::span<const std::size_t> m,
                  std::uint64_t budget = kDefaultBudget) const;

 private:
  std::size_t n_;
  std::vector<double> table_;
};

struct CentroidCheck {
  double lhs = 0.0;  // cl^2(T) by pairwise summation
  double rhs = 0.0;  // k^2 (1 - |z_T|^2)
};

// Both sides of the unit-sphere centroid identity for squared Euclidean
// distances. Requires an l2 coordinate instance with q = 2 and unit-norm
// subset points.
CentroidCheck centroid_clique_identity(const MetricInstance& inst,
                                       std::span<const PointIndex> subset);

}  // namespace divmax
