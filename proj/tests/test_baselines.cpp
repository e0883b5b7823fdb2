#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "baselines.hpp"
#include "error.hpp"
#include "oracles.hpp"

using namespace divmax;

namespace {

MetricInstance line(std::vector<double> xs, double q = 1.0) {
  return MetricInstance::from_points(std::move(xs), 1, Norm::kL2, q);
}

const Objective kObjectives[] = {Objective::kClique, Objective::kStar,
                                 Objective::kBipartition};

}  // namespace

TEST(BruteForce, Examples) {
  const auto sq = MetricInstance::from_points({0, 0, 1, 0, 0, 1, 1, 1, 0.5, 0.5}, 2,
                                              Norm::kL2);
  const auto s = brute_force_opt(sq, Objective::kClique, 4);
  EXPECT_EQ(s.subset, (std::vector<PointIndex>{0, 1, 2, 3}));
  EXPECT_NEAR(s.value, 4 + 2 * std::sqrt(2.0), 1e-12);
  const auto l = brute_force_opt(line({0, 1, 2}), Objective::kClique, 2);
  EXPECT_EQ(l.subset, (std::vector<PointIndex>{0, 2}));
  EXPECT_DOUBLE_EQ(l.value, 2.0);
  EXPECT_EQ(brute_force_opt(line({0, 1, 2}), Objective::kStar, 3).subset.size(), 3u);
  EXPECT_THROW(brute_force_opt(line({0, 1, 2}), Objective::kClique, 4), Error);
  EXPECT_THROW(brute_force_opt(line({0, 1, 2}), Objective::kClique, 1), Error);
  EXPECT_THROW(brute_force_opt(line({0, 1, 2}), Objective::kBipartition, 3), Error);
}

TEST(BruteForce, CapIsEnforced) {
  std::mt19937_64 rng(1);
  const auto inst = oracle::random_points(rng, 30, 2);
  SolveOptions opts;
  opts.enumeration_cap = 1000;
  try {
    brute_force_opt(inst, Objective::kClique, 5, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(BruteForce, MatchesBitmaskOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const double q = trial % 2 ? 2.0 : 1.0;
    const auto inst = oracle::random_points(rng, 9 + trial % 4, 1 + trial % 3, q);
    const auto table = oracle::table_of(inst);
    for (auto obj : kObjectives) {
      const std::size_t k = 4;
      const auto s = brute_force_opt(inst, obj, k);
      const auto best = oracle::optimum(table, obj, k);
      EXPECT_TRUE(oracle::close(s.value, best.value)) << objective_name(obj);
      EXPECT_TRUE(oracle::close(oracle::value(table, obj, s.subset), s.value));
    }
  }
}

TEST(BruteForce, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(2);
  const auto inst = oracle::random_points(rng, 22, 2);
  SolveOptions one;
  SolveOptions many;
  many.threads = 8;
  const auto a = brute_force_opt(inst, Objective::kStar, 4, one);
  const auto b = brute_force_opt(inst, Objective::kStar, 4, many);
  EXPECT_EQ(a.subset, b.subset);
  EXPECT_EQ(a.value, b.value);
}

TEST(Greedy, Examples) {
  const auto g = greedy_clique(line({0, 1, 2}), 2);
  EXPECT_EQ(g.subset, (std::vector<PointIndex>{0, 2}));
  EXPECT_DOUBLE_EQ(g.value, 2.0);
  const auto all = greedy_clique(line({0, 1, 2, 5}), 4);
  EXPECT_EQ(all.subset.size(), 4u);
  EXPECT_DOUBLE_EQ(all.value, brute_force_opt(line({0, 1, 2, 5}), Objective::kClique, 4).value);
  EXPECT_THROW(greedy_clique(line({0, 1}), 3), Error);
}

TEST(Greedy, HalfApproximationOnMetricInstances) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 8 + trial % 7;
    const auto inst = oracle::random_points(rng, n, 1 + trial % 3);
    const std::size_t k = 2 + trial % 5;
    const double opt = brute_force_opt(inst, Objective::kClique, k).value;
    EXPECT_GE(greedy_clique(inst, k).value, 0.49 * opt);
    SolveOptions exact;
    exact.exact_farthest_pair = true;
    EXPECT_GE(greedy_clique(inst, k, exact).value, 0.49 * opt);
  }
}

TEST(Greedy, DeltaEstimateSandwich) {
  const auto equal = MetricInstance::from_matrix(
      {0, 3, 3, 3, 3, 0, 3, 3, 3, 3, 0, 3, 3, 3, 3, 0}, 4);
  EXPECT_DOUBLE_EQ(estimate_delta_clique(equal, 3), 3.0);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = oracle::random_points(rng, 10, 2);
    const std::size_t k = 3 + trial % 4;
    const double delta = brute_force_opt(inst, Objective::kClique, k).value /
                         term_count(Objective::kClique, k);
    const double est = estimate_delta_clique(inst, k);
    EXPECT_TRUE(within(est, delta));
    EXPECT_TRUE(within(delta / 2, est));
  }
  EXPECT_THROW(estimate_delta_clique(equal.with_q(2), 3), Error);
}

TEST(Structure, FarPointsBelongToTheOptimum) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 90; ++trial) {
    const double q = trial % 3 == 0 ? 2.0 : 1.0;
    const auto inst = trial % 2 ? oracle::random_points(rng, 11, 2, q)
                                : oracle::blob_with_outliers(rng, 11, 2, 3, q);
    const auto table = oracle::table_of(inst);
    for (auto obj : kObjectives) {
      const std::size_t k = 4;
      const auto opt = brute_force_opt(inst, obj, k);
      const double delta = opt.value / term_count(obj, k);
      const PointIndex z0 = oracle::star_center(table, opt.subset);
      const double c = obj == Objective::kClique ? 2 : obj == Objective::kStar ? 4 : 6;
      for (PointIndex v = 0; v < inst.size(); ++v) {
        if (within(inst.dist(z0, v), c * std::pow(delta, 1 / q))) continue;
        EXPECT_TRUE(std::binary_search(opt.subset.begin(), opt.subset.end(), v))
            << objective_name(obj) << " point " << v;
      }
    }
  }
}

TEST(Structure, MainClusterHoldsAllButFewerThanHalf) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = trial % 2 ? oracle::random_points(rng, 12, 2)
                                : oracle::blob_with_outliers(rng, 12, 2, 2);
    const auto table = oracle::table_of(inst);
    const std::size_t k = 3 + trial % 4;
    const auto opt = brute_force_opt(inst, Objective::kClique, k);
    const double delta = opt.value / term_count(Objective::kClique, k);
    const PointIndex z0 = oracle::star_center(table, opt.subset);
    std::size_t outside = 0;
    for (PointIndex v = 0; v < inst.size(); ++v)
      outside += !within(inst.dist(z0, v), 2 * delta);
    EXPECT_LT(2 * outside, k);
  }
}
