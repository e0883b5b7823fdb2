#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace divmax {

using PointIndex = std::size_t;

enum class Norm { kL1, kL2, kLInf };

std::string_view norm_name(Norm norm);
Norm parse_norm(std::string_view name);

// Relative tolerance applied to every threshold comparison on distances.
inline constexpr double kRelTol = 1e-9;

// `value <= bound`, relaxed by kRelTol relative to the bound.
inline bool within(double value, double bound) {
  return value <= bound + kRelTol * std::abs(bound);
}

struct Ball {
  PointIndex center = 0;
  double radius = 0.0;
};

// A finite metric space together with the distance exponent q. Either backed
// by coordinates under an l1/l2/linf norm or by an explicit distance matrix.
// Immutable after construction.
class MetricInstance {
 public:
  static MetricInstance from_points(std::vector<double> coords,
                                    std::size_t dim, Norm norm,
                                    double q = 1.0);
  static MetricInstance from_matrix(std::vector<double> entries,
                                    std::size_t n, double q = 1.0,
                                    bool validate = true);

  std::size_t size() const { return n_; }
  double q() const { return q_; }
  bool has_coordinates() const { return dim_ > 0; }
  // Ambient dimension of the coordinate backend; 0 for matrices.
  std::size_t dimension() const { return dim_; }
  Norm norm() const { return norm_; }

  std::span<const double> point(PointIndex i) const;
  std::span<const double> matrix() const { return data_; }
  std::span<const double> coordinates() const { return data_; }

  MetricInstance with_q(double q) const;

  double dist(PointIndex u, PointIndex v) const;
  double dist_pow(PointIndex u, PointIndex v) const { return power(dist(u, v)); }
  // d^q for an already-computed distance.
  double power(double d) const {
    if (q_ == 1.0) return d;
    if (q_ == 2.0) return d * d;
    return std::pow(d, q_);
  }

 private:
  MetricInstance() = default;
  void check_index(PointIndex i) const;

  std::vector<double> data_;
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  Norm norm_ = Norm::kL2;
  double q_ = 1.0;
};

// Throws kInvalidArgument unless `entries` is a symmetric, zero-diagonal,
// nonnegative n x n matrix obeying the triangle inequality.
void validate_metric_matrix(std::span<const double> entries, std::size_t n);

// max_v d(p0, v) with p0 = point 0; lies within a factor 2 of the diameter.
double diameter_estimate(const MetricInstance& inst);

double exact_diameter(const MetricInstance& inst);

// Closed ball membership, ascending indices.
std::vector<PointIndex> ball_members(const MetricInstance& inst, Ball ball);

}  // namespace divmax
