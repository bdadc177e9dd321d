#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gaped/partition_tree.hpp"
#include "gaped/string_access.hpp"

namespace gaped {

using Span = std::span<const Symbol>;

// Unit-cost edit distance by the quadratic table.
std::size_t ed_dp(Span x, Span y);

// Edit distance if it is at most cap; std::nullopt means "exceeds cap".
std::optional<std::size_t> ed_landau_vishkin(Span x, Span y, std::size_t cap);

// Furthest-reach diagonal walk over an equality predicate eq(i, j) that
// compares x[i] with y[j]. Extensions compare characters one by one.
template <class Eq>
std::optional<std::size_t> landau_vishkin(std::size_t nx, std::size_t ny, std::size_t cap, Eq&& eq) {
  const long long n = static_cast<long long>(nx);
  const long long m = static_cast<long long>(ny);
  const long long target = m - n;
  const long long c = static_cast<long long>(cap);
  if (target > c || -target > c) return std::nullopt;
  constexpr long long kNone = LLONG_MIN / 4;
  const long long off = c + 1;
  std::vector<long long> prev(static_cast<std::size_t>(2 * c + 3), kNone);
  std::vector<long long> cur(prev.size(), kNone);
  for (long long e = 0; e <= c; ++e) {
    std::fill(cur.begin(), cur.end(), kNone);
    for (long long d = -e; d <= e; ++d) {
      long long i;
      if (e == 0) {
        i = 0;
      } else {
        i = std::max({prev[d + off] + 1, prev[d + 1 + off] + 1, prev[d - 1 + off]});
      }
      i = std::min({i, n, m - d});
      if (i < 0 || i + d < 0) continue;
      while (i < n && i + d < m && eq(static_cast<std::size_t>(i), static_cast<std::size_t>(i + d))) ++i;
      cur[d + off] = i;
      if (d == target && i == n) return static_cast<std::size_t>(e);
    }
    std::swap(prev, cur);
  }
  return std::nullopt;
}

// Exact distance with the cap doubled until it fits.
std::size_t ed_lv_doubling(Span x, Span y);

std::size_t hamming(Span x, Span y);

// Smallest period via the failure function.
std::size_t period(Span x);
std::vector<std::size_t> failure_function(Span x);

// Start offsets (relative to the window) of exact occurrences; each window
// character is read once.
std::vector<std::size_t> find_occurrences(Span pattern, const Fragment& window);

// Minimum number of p-periodic pieces, by greedy longest periodic prefix.
std::size_t bp_exact(Span x, std::size_t p);

// Root table of the L-restricted tree distance, evaluated directly.
ShiftTable tree_distance_exact(Span x, Span y, const PartitionTree& tree, int L);

// Clamped window of y.
Span clamp_window(Span y, long long a, long long b);

}  // namespace gaped
