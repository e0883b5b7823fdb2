#include "diversity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bisection.hpp"
#include "combinatorics.hpp"
#include "compositions.hpp"
#include "error.hpp"

namespace divmax {

std::string_view objective_name(Objective obj) {
  switch (obj) {
    case Objective::kClique:
      return "clique";
    case Objective::kStar:
      return "star";
    case Objective::kBipartition:
      return "bipartition";
  }
  return "clique";
}

Objective parse_objective(std::string_view name) {
  if (name == "clique") return Objective::kClique;
  if (name == "star") return Objective::kStar;
  if (name == "bipartition") return Objective::kBipartition;
  fail(ErrorCode::kInvalidArgument,
       "unknown objective '" + std::string(name) +
           "' (expected clique, star or bipartition)");
}

double term_count(Objective obj, std::size_t k) {
  const double kk = static_cast<double>(k);
  switch (obj) {
    case Objective::kClique:
      return kk * (kk - 1.0) / 2.0;
    case Objective::kStar:
      return kk - 1.0;
    case Objective::kBipartition:
      return kk * kk / 4.0;
  }
  return 1.0;
}

std::size_t MultiplicityVector::total() const {
  std::size_t sum = 0;
  for (std::size_t m : mult) sum += m;
  return sum;
}

std::vector<PointIndex> MultiplicityVector::expand() const {
  std::vector<PointIndex> out;
  out.reserve(total());
  for (std::size_t i = 0; i < centers.size(); ++i)
    out.insert(out.end(), mult[i], centers[i]);
  return out;
}

namespace {

void require_pair(std::span<const PointIndex> subset) {
  require(subset.size() >= 2, "objective needs a subset of size >= 2");
}

}  // namespace

double clique_value(const MetricInstance& inst,
                    std::span<const PointIndex> subset) {
  require_pair(subset);
  double sum = 0.0;
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      sum += inst.dist_pow(subset[i], subset[j]);
  return sum;
}

StarValue star_value(const MetricInstance& inst,
                     std::span<const PointIndex> subset) {
  require_pair(subset);
  StarValue best{std::numeric_limits<double>::infinity(), 0};
  for (PointIndex z : subset) {
    double sum = 0.0;
    for (PointIndex u : subset) sum += inst.dist_pow(z, u);
    if (sum < best.value || (sum == best.value && z < best.center))
      best = {sum, z};
  }
  return best;
}

BipartitionValue bipartition_value_exact(const MetricInstance& inst,
                                         std::span<const PointIndex> subset,
                                         std::size_t cap) {
  require_pair(subset);
  const std::size_t k = subset.size();
  require(k % 2 == 0, "bipartition needs an even subset size, got " +
                          std::to_string(k));
  if (k > cap) {
    fail(ErrorCode::kCapExceeded,
         "exact bipartition limited to " + std::to_string(cap) +
             " points, got " + std::to_string(k));
  }
  std::vector<PointIndex> pts(subset.begin(), subset.end());
  std::sort(pts.begin(), pts.end());
  std::vector<double> d(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) d[i * k + j] = inst.dist_pow(pts[i], pts[j]);

  // Every balanced split has exactly one side holding pts[0], and that side
  // is the lexicographically smaller one; enumerating only those sides in
  // lexicographic order yields the required tie-break.
  const std::size_t half = k / 2;
  std::vector<std::size_t> rest(half - 1);
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = i;
  std::vector<char> in_left(k);
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best_left;
  do {
    std::fill(in_left.begin(), in_left.end(), 0);
    in_left[0] = 1;
    for (std::size_t r : rest) in_left[r + 1] = 1;
    double cut = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!in_left[i]) continue;
      for (std::size_t j = 0; j < k; ++j)
        if (!in_left[j]) cut += d[i * k + j];
    }
    if (cut < best) {
      best = cut;
      best_left.assign(1, 0);
      for (std::size_t r : rest) best_left.push_back(r + 1);
    }
  } while (next_combination(rest, k - 1));

  BipartitionValue out{best, {}};
  for (std::size_t i : best_left) out.left.push_back(pts[i]);
  return out;
}

double objective_value(const MetricInstance& inst, Objective obj,
                       std::span<const PointIndex> subset,
                       const EvalOptions& opts) {
  switch (obj) {
    case Objective::kClique:
      return clique_value(inst, subset);
    case Objective::kStar:
      return star_value(inst, subset).value;
    case Objective::kBipartition:
      if (subset.size() <= kExactBipartitionCap)
        return bipartition_value_exact(inst, subset).value;
      return min_bisection(inst, subset, opts.bisection_eps, opts.budget)
          .value;
  }
  return 0.0;
}

double value_on_multiset(const MetricInstance& inst, Objective obj,
                         const MultiplicityVector& mv,
                         const EvalOptions& opts) {
  require(mv.centers.size() == mv.mult.size(),
          "multiplicity vector and center list differ in length");
  const std::size_t total = mv.total();
  require(total >= 2, "objective needs a multiset of size >= 2");
  if (obj == Objective::kBipartition)
    require(total % 2 == 0, "bipartition needs an even multiset size, got " +
                                std::to_string(total));

  // Only centers actually present matter.
  std::vector<PointIndex> centers;
  std::vector<std::size_t> mult;
  for (std::size_t i = 0; i < mv.centers.size(); ++i) {
    if (mv.mult[i] == 0) continue;
    centers.push_back(mv.centers[i]);
    mult.push_back(mv.mult[i]);
  }
  // A plain set: evaluate exactly as a subset, in the same summation order.
  if (std::all_of(mult.begin(), mult.end(), [](std::size_t m) { return m == 1; }))
    return objective_value(inst, obj, centers, opts);
  if (obj == Objective::kBipartition && centers.size() > opts.split_center_cap)
    return min_bisection(inst, mv.expand(), opts.bisection_eps, opts.budget)
        .value;

  const CenterTable table(inst, centers);
  switch (obj) {
    case Objective::kClique:
      return table.clique(mult);
    case Objective::kStar:
      return table.star(mult);
    case Objective::kBipartition:
      return table.min_split(mult, opts.budget).value;
  }
  return 0.0;
}

CenterTable::CenterTable(const MetricInstance& inst,
                         std::span<const PointIndex> centers)
    : n_(centers.size()), table_(n_ * n_, 0.0) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double w = inst.dist_pow(centers[i], centers[j]);
      table_[i * n_ + j] = w;
      table_[j * n_ + i] = w;
    }
  }
}

double CenterTable::clique(std::span<const std::size_t> m) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (m[i] == 0) continue;
    double row = 0.0;
    for (std::size_t j = i + 1; j < n_; ++j)
      row += static_cast<double>(m[j]) * at(i, j);
    sum += static_cast<double>(m[i]) * row;
  }
  return sum;
}

double CenterTable::star(std::span<const std::size_t> m) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_; ++i) {
    if (m[i] == 0) continue;
    double sum = 0.0;
    for (std::size_t j = 0; j < n_; ++j)
      sum += static_cast<double>(m[j]) * at(i, j);
    best = std::min(best, sum);
  }
  return best;
}

double CenterTable::cut(std::span<const std::size_t> left,
                        std::span<const std::size_t> m) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (left[i] == 0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < n_; ++j)
      row += static_cast<double>(m[j] - left[j]) * at(i, j);
    sum += static_cast<double>(left[i]) * row;
  }
  return sum;
}

CenterTable::Split CenterTable::min_split(std::span<const std::size_t> m,
                                          std::uint64_t budget) const {
  std::size_t total = 0;
  for (std::size_t v : m) total += v;
  require(total % 2 == 0, "split needs an even multiset size");
  const std::size_t half = total / 2;
  if (count_compositions(m, half) > budget) {
    fail(ErrorCode::kBudgetExceeded,
         "multiset split enumeration exceeds budget of " +
             std::to_string(budget));
  }

  // f(l) = sum_i l_i W_i - sum_{i,j} l_i l_j d_ij with W = D m, accumulated
  // one coordinate at a time.
  std::vector<double> w(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      w[i] += static_cast<double>(m[j]) * at(i, j);
  std::vector<std::size_t> suffix(n_ + 1, 0);
  for (std::size_t i = n_; i-- > 0;) suffix[i] = suffix[i + 1] + m[i];

  Split best{std::numeric_limits<double>::infinity(), {}};
  std::vector<std::size_t> left(n_, 0);
  auto recurse = [&](auto&& self, std::size_t i, std::size_t remaining,
                     double partial) -> void {
    if (i == n_) {
      if (partial < best.value) {
        best.value = partial;
        best.left = left;
      }
      return;
    }
    const std::size_t lo =
        remaining > suffix[i + 1] ? remaining - suffix[i + 1] : 0;
    const std::size_t hi = std::min(m[i], remaining);
    double cross = 0.0;
    for (std::size_t j = 0; j < i; ++j)
      cross += static_cast<double>(left[j]) * at(i, j);
    for (std::size_t v = lo; v <= hi; ++v) {
      left[i] = v;
      const double x = static_cast<double>(v);
      self(self, i + 1, remaining - v, partial + x * w[i] - 2.0 * x * cross);
    }
    left[i] = 0;
  };
  recurse(recurse, 0, half, 0.0);
  // Re-evaluate the winner directly so the reported value carries no
  // accumulated rounding from the incremental sums.
  best.value = cut(best.left, m);
  return best;
}

CentroidCheck centroid_clique_identity(const MetricInstance& inst,
                                       std::span<const PointIndex> subset) {
  require_pair(subset);
  require(inst.has_coordinates() && inst.norm() == Norm::kL2,
          "centroid identity needs an l2 coordinate instance");
  require(inst.q() == 2.0, "centroid identity needs q = 2");
  const std::size_t dim = inst.dimension();
  std::vector<double> centroid(dim, 0.0);
  for (PointIndex p : subset) {
    const auto x = inst.point(p);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      norm2 += x[i] * x[i];
      centroid[i] += x[i];
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > kRelTol) {
      fail(ErrorCode::kInvalidArgument,
           "point " + std::to_string(p) + " is not unit-norm");
    }
  }
  const double k = static_cast<double>(subset.size());
  double z2 = 0.0;
  for (double c : centroid) z2 += (c / k) * (c / k);
  return {clique_value(inst, subset), k * k * (1.0 - z2)};
}

}  // namespace divmax
