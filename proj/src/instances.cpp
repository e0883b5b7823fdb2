#include "instances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "baselines.hpp"
#include "combinatorics.hpp"
#include "error.hpp"

namespace divmax {

namespace {

// Uniform in [0, 1) from the top 53 bits; identical on every platform.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

MetricInstance gen_uniform(std::size_t n, std::size_t dim, std::uint64_t seed) {
  require(n >= 2, "uniform instance needs n >= 2");
  require(dim >= 1, "uniform instance needs D >= 1");
  std::mt19937_64 rng(seed);
  std::vector<double> coords(n * dim);
  for (double& c : coords) c = unit(rng);
  return MetricInstance::from_points(std::move(coords), dim, Norm::kL2);
}

MetricInstance gen_clustered(std::size_t n_cluster, double radius,
                             const std::vector<double>& outliers,
                             std::size_t dim, std::uint64_t seed) {
  require(n_cluster >= 1, "clustered instance needs at least one cluster point");
  require(dim >= 1, "clustered instance needs D >= 1");
  require(radius >= 0.0 && std::isfinite(radius),
          "cluster radius must be finite and nonnegative");
  require(outliers.size() % dim == 0,
          "outlier coordinates are not a multiple of D = " + std::to_string(dim));
  std::mt19937_64 rng(seed);
  std::vector<double> coords;
  coords.reserve(n_cluster * dim + outliers.size());
  std::vector<double> dir(dim);
  for (std::size_t i = 0; i < n_cluster; ++i) {
    // Gaussian direction via Box-Muller, radius r * U^{1/D}.
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        const double u1 = 1.0 - unit(rng);
        const double u2 = unit(rng);
        dir[j] = std::sqrt(-2.0 * std::log(u1)) *
                 std::cos(2.0 * std::numbers::pi * u2);
        norm2 += dir[j] * dir[j];
      }
    } while (norm2 == 0.0);
    const double scale = radius *
                         std::pow(unit(rng), 1.0 / static_cast<double>(dim)) /
                         std::sqrt(norm2);
    for (std::size_t j = 0; j < dim; ++j) coords.push_back(dir[j] * scale);
  }
  coords.insert(coords.end(), outliers.begin(), outliers.end());
  require(coords.size() / dim >= 2, "clustered instance needs n >= 2 points");
  return MetricInstance::from_points(std::move(coords), dim, Norm::kL2);
}

MetricInstance gen_graph_12metric(const std::vector<std::uint8_t>& adjacency,
                                  std::size_t n, bool validate) {
  require(n >= 2, "graph needs at least 2 vertices");
  require(adjacency.size() == n * n, "adjacency must be n x n");
  std::vector<double> entries(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool edge = adjacency[i * n + j] != 0;
      if (validate) {
        require(edge == (adjacency[j * n + i] != 0),
                "adjacency is not symmetric at (" + std::to_string(i) + ", " +
                    std::to_string(j) + ")");
        require(i != j || !edge,
                "self-loop at vertex " + std::to_string(i));
      }
      if (i != j) entries[i * n + j] = edge ? 2.0 : 1.0;
    }
  }
  return MetricInstance::from_matrix(std::move(entries), n, 1.0, validate);
}

void validate_ksum(const KSumInstance& ks) {
  // With K = 1 the two clusters touch (x-components bounded only by 0), so
  // the reduction loses its gap.
  require(ks.k >= 2, "K must be at least 2");
  require(ks.t >= 1, "t must be positive");
  require(ks.values.size() >= ks.k,
          "K-SUM needs at least K = " + std::to_string(ks.k) + " values");
  for (std::int64_t m : ks.values)
    require(m >= -ks.t && m <= ks.t,
            "value " + std::to_string(m) + " lies outside [-t, t]");
}

MetricInstance gen_ksum_reduction(const KSumInstance& ks) {
  validate_ksum(ks);
  const std::size_t n = ks.values.size();
  const double kk = static_cast<double>(ks.k);
  const double tt = static_cast<double>(ks.t);
  std::vector<double> coords(2 * n * 3, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double m = static_cast<double>(ks.values[i]);
    // m'^2 = m^2 / (t^2 K) in one rounding from exact integers.
    const double sq = (m * m) / (tt * tt * kk);
    const double x = std::sqrt(1.0 - sq);
    const double y = m / (tt * std::sqrt(kk));
    double* l = &coords[i * 3];
    double* r = &coords[(n + i) * 3];
    l[0] = -x;
    l[1] = y;
    r[0] = x;
    r[2] = y;
  }
  return MetricInstance::from_points(std::move(coords), 3, Norm::kL2, 2.0);
}

ReductionVerdict verify_reduction(const KSumInstance& ks,
                                  const MetricInstance& inst,
                                  std::uint64_t enumeration_cap) {
  validate_ksum(ks);
  const std::size_t n = ks.values.size();
  require(inst.size() == 2 * n,
          "instance has " + std::to_string(inst.size()) + " points, expected " +
              std::to_string(2 * n));
  if (binomial(n, ks.k) > enumeration_cap)
    fail(ErrorCode::kCapExceeded,
         "C(" + std::to_string(n) + ", " + std::to_string(ks.k) +
             ") K-subsets exceed the enumeration cap");

  ReductionVerdict verdict;
  std::vector<std::size_t> comb(ks.k);
  for (std::size_t i = 0; i < ks.k; ++i) comb[i] = i;
  do {
    std::int64_t sum = 0;
    for (std::size_t i : comb) sum += ks.values[i];
    if (sum == 0) {
      verdict.zero_sum_exists = true;
      break;
    }
  } while (next_combination(comb, n));

  const std::size_t k = 2 * ks.k;
  SolveOptions opts;
  opts.enumeration_cap = enumeration_cap;
  const Solution best =
      brute_force_opt(inst.with_q(2.0), Objective::kClique, k, opts);
  const double kk = static_cast<double>(k);
  const double big_k = static_cast<double>(ks.k);
  const double tt = static_cast<double>(ks.t);
  verdict.max_value = best.value;
  verdict.gap_bound =
      kk * kk * (1.0 - 1.0 / (4.0 * tt * tt * big_k * big_k * big_k));
  const bool reaches = std::abs(best.value - kk * kk) <= 1e-9;
  verdict.equivalence_ok = reaches == verdict.zero_sum_exists;
  verdict.gap_ok =
      verdict.zero_sum_exists || best.value <= verdict.gap_bound + 1e-9;
  return verdict;
}

}  // namespace divmax
