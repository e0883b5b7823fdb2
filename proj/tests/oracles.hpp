#pragma once

// Reference implementations written independently of the library: plain
// loops over explicit distance tables and bitmask enumeration.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "diversity.hpp"
#include "metric.hpp"

namespace oracle {

using divmax::MetricInstance;
using divmax::Objective;

// d^q for every ordered pair, computed from raw coordinates.
struct Table {
  std::size_t n = 0;
  std::vector<double> w;
  double at(std::size_t i, std::size_t j) const { return w[i * n + j]; }
};

inline double raw_distance(const MetricInstance& inst, std::size_t i,
                           std::size_t j) {
  if (!inst.has_coordinates()) return inst.matrix()[i * inst.size() + j];
  const auto a = inst.point(i);
  const auto b = inst.point(j);
  double acc = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    const double d = std::abs(a[t] - b[t]);
    switch (inst.norm()) {
      case divmax::Norm::kL1: acc += d; break;
      case divmax::Norm::kL2: acc += d * d; break;
      case divmax::Norm::kLInf: acc = std::max(acc, d); break;
    }
  }
  return inst.norm() == divmax::Norm::kL2 ? std::sqrt(acc) : acc;
}

inline Table table_of(const MetricInstance& inst) {
  Table t;
  t.n = inst.size();
  t.w.resize(t.n * t.n);
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      t.w[i * t.n + j] = std::pow(raw_distance(inst, i, j), inst.q());
  return t;
}

inline double clique(const Table& t, const std::vector<std::size_t>& s) {
  double sum = 0.0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) sum += t.at(s[a], s[b]);
  return sum;
}

inline double star(const Table& t, const std::vector<std::size_t>& s) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t z : s) {
    double sum = 0.0;
    for (std::size_t u : s) sum += t.at(z, u);
    best = std::min(best, sum);
  }
  return best;
}

// Minimum over every balanced split of positions.
inline double bipartition(const Table& t, const std::vector<std::size_t>& s) {
  const std::size_t k = s.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k / 2) continue;
    double sum = 0.0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        if ((mask >> a & 1u) && !(mask >> b & 1u)) sum += t.at(s[a], s[b]);
    best = std::min(best, sum);
  }
  return best;
}

inline double value(const Table& t, Objective obj,
                    const std::vector<std::size_t>& s) {
  switch (obj) {
    case Objective::kClique: return clique(t, s);
    case Objective::kStar: return star(t, s);
    case Objective::kBipartition: return bipartition(t, s);
  }
  return 0.0;
}

struct Best {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> subset;
};

// Maximum over all k-subsets, by bitmask.
inline Best optimum(const Table& t, Objective obj, std::size_t k) {
  Best best;
  std::vector<std::size_t> s;
  for (std::uint32_t mask = 0; mask < (1u << t.n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    s.clear();
    for (std::size_t i = 0; i < t.n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    const double v = value(t, obj, s);
    if (v > best.value) {
      best.value = v;
      best.subset = s;
    }
  }
  return best;
}

// Star center of s: lowest index among minimizers.
inline std::size_t star_center(const Table& t, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  std::size_t arg = sorted.front();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t z : sorted) {
    double sum = 0.0;
    for (std::size_t u : s) sum += t.at(z, u);
    if (sum < best) {
      best = sum;
      arg = z;
    }
  }
  return arg;
}

inline double unit(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline MetricInstance random_points(std::mt19937_64& rng, std::size_t n,
                                    std::size_t dim, double q = 1.0,
                                    divmax::Norm norm = divmax::Norm::kL2) {
  std::vector<double> c(n * dim);
  for (double& x : c) x = unit(rng);
  return MetricInstance::from_points(std::move(c), dim, norm, q);
}

// A tight blob plus a few far points: the shape the structural results are
// about.
inline MetricInstance blob_with_outliers(std::mt19937_64& rng, std::size_t n,
                                         std::size_t dim, std::size_t far,
                                         double q = 1.0) {
  std::vector<double> c(n * dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      c[i * dim + j] = i < far ? 2.0 + 3.0 * unit(rng) * (j == i % dim ? 1 : 0) +
                                     unit(rng)
                               : 0.05 * unit(rng);
  return MetricInstance::from_points(std::move(c), dim, divmax::Norm::kL2, q);
}

inline bool close(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace oracle
