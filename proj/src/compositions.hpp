#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "combinatorics.hpp"

namespace divmax {

// Calls visit(m) for every vector 0 <= m <= caps with sum(m) == total, in
// lexicographic order from the largest first coordinate down. Pruned by the
// remaining capacity, so infeasible prefixes are never expanded.
template <class Visit>
void for_each_composition(std::span<const std::size_t> caps, std::size_t total,
                          Visit&& visit) {
  const std::size_t n = caps.size();
  std::vector<std::size_t> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + caps[i];
  if (suffix[0] < total) return;
  std::vector<std::size_t> m(n, 0);
  auto recurse = [&](auto&& self, std::size_t i, std::size_t remaining) -> void {
    if (i == n) {
      visit(std::span<const std::size_t>(m));
      return;
    }
    const std::size_t hi = std::min(caps[i], remaining);
    const std::size_t lo =
        remaining > suffix[i + 1] ? remaining - suffix[i + 1] : 0;
    for (std::size_t v = hi + 1; v-- > lo;) {
      m[i] = v;
      self(self, i + 1, remaining - v);
    }
    m[i] = 0;
  };
  recurse(recurse, 0, total);
}

inline std::vector<std::vector<std::size_t>> enumerate_compositions(
    std::span<const std::size_t> caps, std::size_t total) {
  std::vector<std::vector<std::size_t>> out;
  for_each_composition(caps, total, [&](std::span<const std::size_t> m) {
    out.emplace_back(m.begin(), m.end());
  });
  return out;
}

// Number of vectors for_each_composition visits, saturating at kSaturated.
inline std::uint64_t count_compositions(std::span<const std::size_t> caps,
                                        std::size_t total) {
  std::vector<std::uint64_t> ways(total + 1, 0);
  ways[0] = 1;
  for (std::size_t cap : caps) {
    std::vector<std::uint64_t> next(total + 1, 0);
    for (std::size_t s = 0; s <= total; ++s) {
      if (ways[s] == 0) continue;
      for (std::size_t v = 0; v <= cap && s + v <= total; ++v)
        next[s + v] = saturating_add(next[s + v], ways[s]);
    }
    ways = std::move(next);
  }
  return ways[total];
}

}  // namespace divmax
