#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "diversity.hpp"
#include "metric.hpp"

namespace divmax {

// Greedy partition of a point list into cells. Members are kept in
// processing order (ascending point index); a point list may repeat an index,
// in which case every copy lands in the same cell.
struct CellDecomposition {
  static constexpr std::size_t kNoCell = std::numeric_limits<std::size_t>::max();

  std::vector<PointIndex> members;
  std::vector<std::size_t> cell;          // per member: cell slot
  std::vector<double> admitted_radius;    // per member: join allowance
  std::vector<PointIndex> centers;        // per cell, in creation order
  std::vector<std::vector<std::size_t>> cell_members;  // member positions

  std::size_t cell_count() const { return centers.size(); }
  std::size_t cell_size(std::size_t c) const { return cell_members[c].size(); }
  // Cell slot holding point `p`, or kNoCell.
  std::size_t cell_of_point(PointIndex p) const;

  // Point-index lookup; filled by the decompose functions.
  std::vector<std::size_t> slot_by_point;
};

// Fixed radius: each new center (lowest unassigned index) absorbs every
// unassigned point within `radius`.
CellDecomposition decompose_fixed(const MetricInstance& inst,
                                  std::span<const PointIndex> points,
                                  double radius);

// Variable radius around `z`: v joins center u iff
// d(v,u) <= delta * max(base, d(v,z)/2).
CellDecomposition decompose_variable(const MetricInstance& inst,
                                     std::span<const PointIndex> points,
                                     PointIndex z, double base, double delta);

// Multiplicity of each cell in `subset`, nonzero entries only, in cell
// creation order.
MultiplicityVector project_multiset(const CellDecomposition& decomp,
                                    std::span<const PointIndex> subset);

// Centers pairwise farther than `radius` apart and every member within
// `radius` of its center.
bool satisfies_net_property(const MetricInstance& inst,
                            const CellDecomposition& decomp, double radius);

}  // namespace divmax
