#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "baselines.hpp"
#include "error.hpp"
#include "fast_clique.hpp"
#include "oracles.hpp"
#include "ptas.hpp"

using namespace divmax;

namespace {

MetricInstance line(std::vector<double> xs, double q = 1.0) {
  return MetricInstance::from_points(std::move(xs), 1, Norm::kL2, q);
}

std::vector<PointIndex> iota_points(std::size_t n) {
  std::vector<PointIndex> v(n);
  std::iota(v.begin(), v.end(), PointIndex{0});
  return v;
}

}  // namespace

TEST(Ladder, Shape) {
  EXPECT_EQ(multiplicity_ladder(10, 4, 0.5), (std::vector<std::size_t>{4, 3, 2, 1, 0}));
  EXPECT_EQ(multiplicity_ladder(0, 4, 0.5), (std::vector<std::size_t>{0}));
  const auto big = multiplicity_ladder(100000, 10000, 0.3);
  EXPECT_EQ(big.front(), 10000u);
  EXPECT_EQ(big.back(), 0u);
  EXPECT_TRUE(std::is_sorted(big.rbegin(), big.rend()));
  EXPECT_EQ(std::adjacent_find(big.begin(), big.end()), big.end());
  // O(log k / eps) entries, far from the k + 1 of the full range.
  EXPECT_LT(big.size(), 120u);
}

TEST(Ladder, CoversEveryTarget) {
  for (double eps : {0.1, 0.3, 0.5}) {
    for (std::size_t m0 : {1u, 2u, 7u, 100u, 1000u, 10000u}) {
      const auto ladder = multiplicity_ladder(m0, m0, eps);
      for (std::size_t t = 0; t <= m0; ++t) {
        const bool covered = std::any_of(ladder.begin(), ladder.end(), [&](std::size_t v) {
          return v <= t && static_cast<double>(v) >= (1 - eps / 2) * static_cast<double>(t) - 1e-9;
        });
        ASSERT_TRUE(covered) << "eps=" << eps << " m0=" << m0 << " t=" << t;
      }
    }
  }
}

TEST(FindCenter, Examples) {
  const auto same = line({1, 1, 1, 1});
  const auto d0 = decompose_fixed(same, iota_points(4), 0.1);
  EXPECT_EQ(find_center(same, d0, 0.0, 4), std::optional<PointIndex>(0));

  // Clusters of 5 near 0 and 3 near 10. With k = 8 the big cluster leaves
  // 3 < 4 points outside radius 1 and the small one 5. With k = 4 neither
  // leaves fewer than 2.
  const auto two = line({0, 0.1, 0.2, 0.3, 0.4, 10, 10.1, 10.2});
  const auto d = decompose_fixed(two, iota_points(8), 0.5);
  EXPECT_EQ(find_center(two, d, 1.0, 8), std::optional<PointIndex>(0));
  EXPECT_EQ(find_center(two, d, 1.0, 4), std::nullopt);
}

TEST(FindCenter, LiesNearTheInstanceCenter) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = trial % 2 ? oracle::random_points(rng, 12, 2)
                                : oracle::blob_with_outliers(rng, 12, 2, 2);
    const std::size_t k = 3 + trial % 4;
    const auto table = oracle::table_of(inst);
    const auto opt = brute_force_opt(inst, Objective::kClique, k);
    const double delta = opt.value / term_count(Objective::kClique, k);
    const PointIndex z0 = oracle::star_center(table, opt.subset);
    const double est = estimate_delta_clique(inst, k);
    const auto d = decompose_fixed(inst, iota_points(12), est / 8);
    const auto z = find_center(inst, d, 5 * est, k);
    ASSERT_TRUE(z.has_value());
    EXPECT_TRUE(within(inst.dist(z0, *z), 2 * delta + 5 * est));
    EXPECT_TRUE(within(inst.dist(z0, *z), 9 * est + 1e-12));
  }
}

TEST(Evaluator, MatchesMultisetValue) {
  const auto two = line({0, 1});
  const std::vector<PointIndex> inner{0, 1};
  const CliqueMultiplicityEvaluator e(two, inner, {}, {});
  EXPECT_DOUBLE_EQ(e.value(std::vector<std::size_t>{2, 3}), 6.0);
  EXPECT_DOUBLE_EQ(e.value(std::vector<std::size_t>{4, 0}), 0.0);

  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = oracle::random_points(rng, 12, 2);
    auto pts = iota_points(12);
    std::shuffle(pts.begin(), pts.end(), rng);
    const std::size_t split = 1 + trial % 10;
    const std::vector<PointIndex> in(pts.begin(), pts.begin() + split);
    const std::vector<PointIndex> out(pts.begin() + split, pts.end());
    std::vector<std::size_t> mi(in.size()), mo(out.size());
    for (auto& x : mi) x = rng() % 4;
    for (auto& x : mo) x = rng() % 3;
    const CliqueMultiplicityEvaluator ev(inst, in, out, mo);
    MultiplicityVector mv{in, mi};
    mv.centers.insert(mv.centers.end(), out.begin(), out.end());
    mv.mult.insert(mv.mult.end(), mo.begin(), mo.end());
    if (mv.total() < 2) continue;
    EXPECT_TRUE(oracle::close(ev.value(mi), value_on_multiset(inst, Objective::kClique, mv)));
  }
}

TEST(FastClique, Examples) {
  const auto whole = solve_fast(line({0, 1, 3}), 3, 0.3);
  EXPECT_EQ(whole.subset, (std::vector<PointIndex>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(whole.value, 6.0);
  EXPECT_THROW(solve_fast(line({0, 1, 3}, 2.0), 2, 0.3), Error);
  EXPECT_THROW(solve_fast(line({0, 1, 3}), 4, 0.3), Error);
  EXPECT_THROW(solve_fast(line({0, 1, 3}), 2, 1.5), Error);
  const auto same = solve_fast(line({4, 4, 4}), 2, 0.3);
  EXPECT_DOUBLE_EQ(same.value, 0.0);
}

TEST(FastClique, GuaranteeAgainstBruteForce) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 120; ++trial) {
    const auto inst = trial % 2 ? oracle::random_points(rng, 12, 1 + trial % 3)
                                : oracle::blob_with_outliers(rng, 12, 2, 1 + trial % 3);
    const std::size_t k = 2 + trial % 5;
    const double opt = brute_force_opt(inst, Objective::kClique, k).value;
    for (double eps : {0.05, 0.1, 0.3}) {
      const auto s = solve_fast(inst, k, eps);
      EXPECT_EQ(s.subset.size(), k);
      EXPECT_TRUE(std::adjacent_find(s.subset.begin(), s.subset.end()) == s.subset.end());
      EXPECT_GE(s.value, (1 - 8 * eps) * opt * (1 - 1e-9));
      EXPECT_TRUE(oracle::close(s.value, clique_value(inst, s.subset)));
    }
  }
}

TEST(FastClique, Deterministic) {
  std::mt19937_64 rng(109);
  const auto inst = oracle::random_points(rng, 3000, 1);
  const auto a = solve_fast(inst, 5, 0.5);
  SolveOptions many;
  many.threads = 8;
  const auto b = solve_fast(inst, 5, 0.5, many);
  EXPECT_EQ(a.subset, b.subset);
  EXPECT_EQ(a.value, b.value);
}

TEST(FastClique, LargeSegmentBeatsGreedyFloor) {
  std::mt19937_64 rng(113);
  const auto inst = oracle::random_points(rng, 100000, 1);
  for (std::size_t k : {4u, 6u}) {
    const auto s = solve_fast(inst, k, 0.5);
    EXPECT_GE(s.value, greedy_clique(inst, k).value * (1 - 1e-9));
  }
}

TEST(FastClique, UnitSquareAtScaleExceedsTheBudget) {
  std::mt19937_64 rng(127);
  const auto inst = oracle::random_points(rng, 100000, 2);
  try {
    solve_fast(inst, 50, 0.5);
    FAIL() << "expected the ladder search to exceed the budget";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}
