#include "cells.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "error.hpp"

namespace divmax {

std::size_t CellDecomposition::cell_of_point(PointIndex p) const {
  if (p >= slot_by_point.size()) return kNoCell;
  return slot_by_point[p];
}

namespace {

// Shared greedy. `allowance(pos)` is the join radius of member `pos`.
template <class Allowance>
CellDecomposition greedy(const MetricInstance& inst,
                         std::span<const PointIndex> points,
                         Allowance&& allowance) {
  CellDecomposition out;
  out.members.assign(points.begin(), points.end());
  std::stable_sort(out.members.begin(), out.members.end());
  const std::size_t m = out.members.size();
  out.cell.assign(m, CellDecomposition::kNoCell);
  out.admitted_radius.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) out.admitted_radius[i] = allowance(out.members[i], i);

  std::vector<std::size_t> pending(m);
  std::iota(pending.begin(), pending.end(), std::size_t{0});
  std::vector<std::size_t> keep;
  while (!pending.empty()) {
    const std::size_t head = pending.front();
    const PointIndex center = out.members[head];
    const std::size_t slot = out.centers.size();
    out.centers.push_back(center);
    out.cell_members.emplace_back();
    keep.clear();
    for (std::size_t pos : pending) {
      const bool joins =
          pos == head || within(inst.dist(center, out.members[pos]),
                                out.admitted_radius[pos]);
      if (joins) {
        out.cell[pos] = slot;
        out.cell_members[slot].push_back(pos);
      } else {
        keep.push_back(pos);
      }
    }
    pending.swap(keep);
  }

  PointIndex max_index = 0;
  for (PointIndex p : out.members) max_index = std::max(max_index, p);
  out.slot_by_point.assign(m == 0 ? 0 : max_index + 1, CellDecomposition::kNoCell);
  for (std::size_t i = 0; i < m; ++i) out.slot_by_point[out.members[i]] = out.cell[i];
  return out;
}

}  // namespace

CellDecomposition decompose_fixed(const MetricInstance& inst,
                                  std::span<const PointIndex> points,
                                  double radius) {
  require(radius > 0.0, "cell radius must be positive");
  return greedy(inst, points,
                [radius](PointIndex, std::size_t) { return radius; });
}

CellDecomposition decompose_variable(const MetricInstance& inst,
                                     std::span<const PointIndex> points,
                                     PointIndex z, double base, double delta) {
  require(base > 0.0, "variable decomposition needs a positive base radius");
  require(delta > 0.0, "variable decomposition needs a positive delta");
  require(std::find(points.begin(), points.end(), z) != points.end(),
          "star center must belong to the decomposed set");
  return greedy(inst, points, [&](PointIndex v, std::size_t) {
    return delta * std::max(base, 0.5 * inst.dist(v, z));
  });
}

MultiplicityVector project_multiset(const CellDecomposition& decomp,
                                    std::span<const PointIndex> subset) {
  std::vector<std::size_t> counts(decomp.cell_count(), 0);
  for (PointIndex p : subset) {
    const std::size_t slot = decomp.cell_of_point(p);
    if (slot == CellDecomposition::kNoCell) {
      fail(ErrorCode::kInvalidArgument,
           "point " + std::to_string(p) + " is not part of the decomposition");
    }
    ++counts[slot];
  }
  MultiplicityVector mv;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] == 0) continue;
    mv.centers.push_back(decomp.centers[c]);
    mv.mult.push_back(counts[c]);
  }
  return mv;
}

bool satisfies_net_property(const MetricInstance& inst,
                            const CellDecomposition& decomp, double radius) {
  for (std::size_t i = 0; i < decomp.members.size(); ++i) {
    const PointIndex c = decomp.centers[decomp.cell[i]];
    if (!within(inst.dist(decomp.members[i], c), radius)) return false;
  }
  for (std::size_t a = 0; a < decomp.cell_count(); ++a)
    for (std::size_t b = a + 1; b < decomp.cell_count(); ++b)
      if (inst.dist(decomp.centers[a], decomp.centers[b]) <= radius) return false;
  return true;
}

}  // namespace divmax
