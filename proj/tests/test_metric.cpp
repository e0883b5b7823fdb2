#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "error.hpp"
#include "instance_io.hpp"
#include "metric.hpp"
#include "oracles.hpp"

using namespace divmax;

namespace {

MetricInstance line(std::vector<double> xs, double q = 1.0) {
  return MetricInstance::from_points(std::move(xs), 1, Norm::kL2, q);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kLogic;
}

}  // namespace

TEST(Metric, NormsAndPowers) {
  const auto l2 = MetricInstance::from_points({0, 0, 3, 4}, 2, Norm::kL2);
  const auto l1 = MetricInstance::from_points({0, 0, 3, 4}, 2, Norm::kL1);
  const auto linf = MetricInstance::from_points({0, 0, 3, 4}, 2, Norm::kLInf);
  EXPECT_DOUBLE_EQ(l2.dist(0, 1), 5.0);
  EXPECT_DOUBLE_EQ(l1.dist(0, 1), 7.0);
  EXPECT_DOUBLE_EQ(linf.dist(0, 1), 4.0);
  EXPECT_DOUBLE_EQ(l2.with_q(2).dist_pow(0, 1), 25.0);
  EXPECT_DOUBLE_EQ(l2.with_q(3).dist_pow(0, 1), 125.0);
  EXPECT_NEAR(l2.with_q(1.5).dist_pow(0, 1), std::pow(5.0, 1.5), 1e-12);
  EXPECT_DOUBLE_EQ(l2.with_q(2).dist(0, 1), 5.0);
}

TEST(Metric, ConstructionErrors) {
  EXPECT_EQ(code_of([] { line({0.0}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { line({0.0, 1.0}, 0.5); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { line({0.0, 1.0}).dist(0, 2); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] {
              MetricInstance::from_points({0, 1, 2}, 2, Norm::kL2);
            }),
            ErrorCode::kInvalidArgument);
}

TEST(Metric, MatrixValidation) {
  EXPECT_NO_THROW(MetricInstance::from_matrix({0, 1, 2, 1, 0, 1, 2, 1, 0}, 3));
  // asymmetric
  EXPECT_THROW(MetricInstance::from_matrix({0, 1, 2, 1, 0, 1, 2.5, 1, 0}, 3), Error);
  // nonzero diagonal
  EXPECT_THROW(MetricInstance::from_matrix({1, 1, 1, 0}, 2), Error);
  // triangle violation: d(0,2) = 3 > 1 + 1
  EXPECT_THROW(MetricInstance::from_matrix({0, 1, 3, 1, 0, 1, 3, 1, 0}, 3), Error);
  // negative entry
  EXPECT_THROW(MetricInstance::from_matrix({0, -1, -1, 0}, 2), Error);
  // unvalidated matrices are accepted as given
  EXPECT_NO_THROW(MetricInstance::from_matrix({0, 1, 3, 1, 0, 1, 3, 1, 0}, 3, 1.0, false));
}

TEST(Metric, BallMembers) {
  const auto inst = line({0, 1, 2});
  EXPECT_EQ(ball_members(inst, {1, 1.0}), (std::vector<PointIndex>{0, 1, 2}));
  EXPECT_EQ(ball_members(inst, {0, 0.0}), (std::vector<PointIndex>{0}));
  const auto dup = line({0, 0, 5});
  EXPECT_EQ(ball_members(dup, {0, 0.0}), (std::vector<PointIndex>{0, 1}));
  EXPECT_EQ(ball_members(inst, {0, 10.0}).size(), 3u);
}

TEST(Metric, DiameterEstimateSandwich) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = oracle::random_points(rng, 2 + trial % 30, 1 + trial % 4);
    const double est = diameter_estimate(inst);
    const double exact = exact_diameter(inst);
    EXPECT_LE(est, exact * (1 + 1e-12));
    EXPECT_LE(exact, 2 * est * (1 + 1e-12));
  }
}

TEST(Metric, RelaxedTriangleSampled) {
  std::mt19937_64 rng(5);
  for (double q : {1.0, 1.5, 2.0, 3.0}) {
    const auto inst = oracle::random_points(rng, 30, 3, q);
    for (PointIndex u = 0; u < 30; ++u)
      for (PointIndex v = 0; v < 30; ++v)
        for (PointIndex w = 0; w < 30; w += 7)
          EXPECT_TRUE(within(inst.dist_pow(u, w),
                             std::pow(2.0, q - 1) *
                                 (inst.dist_pow(u, v) + inst.dist_pow(v, w))));
  }
}

TEST(InstanceIo, ParsePointsAndMatrix) {
  const auto pts = parse_instance("# square\npoints 2 4 l2\n0 0\n1 0\n\n0 1\n1 1\n");
  EXPECT_EQ(pts.size(), 4u);
  EXPECT_NEAR(pts.dist(0, 3), std::sqrt(2.0), 1e-15);
  const auto mat = parse_instance("matrix 3\n0 1 2\n1 0 1\n2 1 0\n", 2.0);
  EXPECT_EQ(mat.size(), 3u);
  EXPECT_DOUBLE_EQ(mat.dist_pow(0, 2), 4.0);
  EXPECT_EQ(parse_instance("points 1 2 linf\n-1\n1e0\n").norm(), Norm::kLInf);
}

TEST(InstanceIo, ParseErrorsNameTheLine) {
  auto message = [](const char* text) {
    try {
      parse_instance(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("points 2 2 l2\n0 0\n1 x\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("points 2 2 l2\n0 0\n1\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("points 2 3 l2\n0 0\n1 1\n").find("3"), std::string::npos);
  EXPECT_NE(message("cube 3\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("points 2 2 l7\n0 0\n1 1\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("").find("empty"), std::string::npos);
}

TEST(InstanceIo, InvalidMatrixIsRejected) {
  EXPECT_THROW(parse_instance("matrix 2\n0 1\n2 0\n"), Error);
  EXPECT_NO_THROW(parse_instance("matrix 2\n0 1\n2 0\n", 1.0, false));
}

TEST(InstanceIo, RoundTripIsExactAndStable) {
  std::mt19937_64 rng(3);
  const auto inst = oracle::random_points(rng, 17, 3);
  const std::string text = format_instance(inst);
  const auto back = parse_instance(text);
  ASSERT_EQ(back.size(), inst.size());
  for (PointIndex i = 0; i < inst.size(); ++i)
    for (PointIndex j = 0; j < inst.size(); ++j)
      EXPECT_EQ(back.dist(i, j), inst.dist(i, j));
  EXPECT_EQ(format_instance(back), text);

  const auto mat = parse_instance("matrix 3\n0 1 2\n1 0 1.5\n2 1.5 0\n");
  EXPECT_EQ(format_instance(parse_instance(format_instance(mat))), format_instance(mat));

  const auto path = std::filesystem::temp_directory_path() / "divmax_io_test.txt";
  save_instance(inst, path.string());
  EXPECT_EQ(format_instance(load_instance(path.string())), text);
  std::filesystem::remove(path);
  EXPECT_EQ(code_of([] { load_instance("/nonexistent/dir/file.txt"); }), ErrorCode::kIo);
}
