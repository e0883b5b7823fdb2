#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace divmax {

inline constexpr std::uint64_t kSaturated =
    std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// C(n, k), saturating at kSaturated.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    // result * num / i is exact at every step; guard the product.
    if (result > kSaturated / num) return kSaturated;
    result = result * num / i;
  }
  return result;
}

// Advances `comb` (strictly increasing, values < n) to the next
// k-combination in lexicographic order. Returns false after the last one.
inline bool next_combination(std::span<std::size_t> comb, std::size_t n) {
  const std::size_t k = comb.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// The combination of lexicographic rank `rank` among all k-subsets of
// {0..n-1}.
inline std::vector<std::size_t> unrank_combination(std::size_t n,
                                                   std::size_t k,
                                                   std::uint64_t rank) {
  std::vector<std::size_t> comb(k);
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = next;; ++v) {
      const std::uint64_t block = binomial(n - v - 1, k - i - 1);
      if (rank < block) {
        comb[i] = v;
        next = v + 1;
        break;
      }
      rank -= block;
    }
  }
  return comb;
}

}  // namespace divmax
