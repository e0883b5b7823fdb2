#include "metric.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace divmax {

std::string_view norm_name(Norm norm) {
  switch (norm) {
    case Norm::kL1:
      return "l1";
    case Norm::kL2:
      return "l2";
    case Norm::kLInf:
      return "linf";
  }
  return "l2";
}

Norm parse_norm(std::string_view name) {
  if (name == "l1") return Norm::kL1;
  if (name == "l2") return Norm::kL2;
  if (name == "linf") return Norm::kLInf;
  fail(ErrorCode::kInvalidArgument,
       "unknown norm '" + std::string(name) + "' (expected l1, l2 or linf)");
}

namespace {

void check_q(double q) {
  require(std::isfinite(q) && q >= 1.0, "exponent q must be >= 1");
}

}  // namespace

MetricInstance MetricInstance::from_points(std::vector<double> coords,
                                           std::size_t dim, Norm norm,
                                           double q) {
  check_q(q);
  require(dim >= 1, "point dimension must be >= 1");
  require(coords.size() % dim == 0,
          "coordinate count is not a multiple of the dimension");
  const std::size_t n = coords.size() / dim;
  require(n >= 2, "an instance needs at least 2 points");
  for (double c : coords) require(std::isfinite(c), "non-finite coordinate");
  MetricInstance inst;
  inst.data_ = std::move(coords);
  inst.n_ = n;
  inst.dim_ = dim;
  inst.norm_ = norm;
  inst.q_ = q;
  return inst;
}

MetricInstance MetricInstance::from_matrix(std::vector<double> entries,
                                           std::size_t n, double q,
                                           bool validate) {
  check_q(q);
  require(n >= 2, "an instance needs at least 2 points");
  require(entries.size() == n * n, "matrix must have n*n entries");
  if (validate) validate_metric_matrix(entries, n);
  MetricInstance inst;
  inst.data_ = std::move(entries);
  inst.n_ = n;
  inst.dim_ = 0;
  inst.q_ = q;
  return inst;
}

std::span<const double> MetricInstance::point(PointIndex i) const {
  check_index(i);
  require(has_coordinates(), "matrix-backed instance has no coordinates");
  return std::span<const double>(data_).subspan(i * dim_, dim_);
}

MetricInstance MetricInstance::with_q(double q) const {
  check_q(q);
  MetricInstance copy = *this;
  copy.q_ = q;
  return copy;
}

void MetricInstance::check_index(PointIndex i) const {
  if (i >= n_) {
    fail(ErrorCode::kOutOfRange, "point index " + std::to_string(i) +
                                     " out of range (n = " +
                                     std::to_string(n_) + ")");
  }
}

double MetricInstance::dist(PointIndex u, PointIndex v) const {
  check_index(u);
  check_index(v);
  if (u == v) return 0.0;
  if (dim_ == 0) return data_[u * n_ + v];
  const double* a = data_.data() + u * dim_;
  const double* b = data_.data() + v * dim_;
  double acc = 0.0;
  switch (norm_) {
    case Norm::kL1:
      for (std::size_t i = 0; i < dim_; ++i) acc += std::abs(a[i] - b[i]);
      return acc;
    case Norm::kL2:
      for (std::size_t i = 0; i < dim_; ++i) {
        const double diff = a[i] - b[i];
        acc += diff * diff;
      }
      return std::sqrt(acc);
    case Norm::kLInf:
      for (std::size_t i = 0; i < dim_; ++i)
        acc = std::max(acc, std::abs(a[i] - b[i]));
      return acc;
  }
  return acc;
}

void validate_metric_matrix(std::span<const double> entries, std::size_t n) {
  require(entries.size() == n * n, "matrix must have n*n entries");
  auto at = [&](std::size_t i, std::size_t j) { return entries[i * n + j]; };
  auto where = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (std::size_t i = 0; i < n; ++i) {
    require(at(i, i) == 0.0, "nonzero diagonal entry at " + where(i, i));
    for (std::size_t j = 0; j < n; ++j) {
      const double d = at(i, j);
      require(std::isfinite(d) && d >= 0.0,
              "negative or non-finite entry at " + where(i, j));
      const double tol = kRelTol * std::max(1.0, std::abs(d));
      require(std::abs(d - at(j, i)) <= tol,
              "matrix not symmetric at " + where(i, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!within(at(i, k), at(i, j) + at(j, k))) {
          fail(ErrorCode::kInvalidArgument,
               "triangle inequality violated for points " +
                   std::to_string(i) + ", " + std::to_string(j) + ", " +
                   std::to_string(k));
        }
      }
    }
  }
}

double diameter_estimate(const MetricInstance& inst) {
  double best = 0.0;
  for (PointIndex v = 1; v < inst.size(); ++v)
    best = std::max(best, inst.dist(0, v));
  return best;
}

double exact_diameter(const MetricInstance& inst) {
  double best = 0.0;
  for (PointIndex u = 0; u < inst.size(); ++u)
    for (PointIndex v = u + 1; v < inst.size(); ++v)
      best = std::max(best, inst.dist(u, v));
  return best;
}

std::vector<PointIndex> ball_members(const MetricInstance& inst, Ball ball) {
  require(ball.radius >= 0.0, "ball radius must be nonnegative");
  std::vector<PointIndex> out;
  for (PointIndex v = 0; v < inst.size(); ++v)
    if (within(inst.dist(ball.center, v), ball.radius)) out.push_back(v);
  return out;
}

}  // namespace divmax
