#include "gaped/exact_core.hpp"

#include <limits>
#include <stdexcept>

namespace gaped {

std::size_t ed_dp(Span x, Span y) {
  std::vector<std::size_t> row(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + (x[i - 1] == y[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[y.size()];
}

std::optional<std::size_t> ed_landau_vishkin(Span x, Span y, std::size_t cap) {
  return landau_vishkin(x.size(), y.size(), cap, [&](std::size_t i, std::size_t j) { return x[i] == y[j]; });
}

std::size_t ed_lv_doubling(Span x, Span y) {
  std::size_t cap = 1;
  const std::size_t bound = x.size() + y.size();
  while (true) {
    if (auto d = ed_landau_vishkin(x, y, std::min(cap, bound))) return *d;
    cap *= 2;
  }
}

std::size_t hamming(Span x, Span y) {
  if (x.size() != y.size()) throw std::invalid_argument("hamming: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

std::vector<std::size_t> failure_function(Span x) {
  std::vector<std::size_t> f(x.size() + 1, 0);
  std::size_t q = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    while (q > 0 && x[i] != x[q]) q = f[q];
    if (x[i] == x[q]) ++q;
    f[i + 1] = q;
  }
  return f;
}

std::size_t period(Span x) {
  if (x.empty()) throw std::invalid_argument("period of an empty string");
  return x.size() - failure_function(x).back();
}

std::vector<std::size_t> find_occurrences(Span pattern, const Fragment& window) {
  if (pattern.empty()) throw std::invalid_argument("find_occurrences: empty pattern");
  const auto f = failure_function(pattern);
  std::vector<std::size_t> out;
  std::size_t q = 0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    const Symbol c = window.read(i);
    while (q > 0 && (q == pattern.size() || c != pattern[q])) q = f[q];
    if (c == pattern[q]) ++q;
    if (q == pattern.size()) out.push_back(i + 1 - q);
  }
  return out;
}

std::size_t bp_exact(Span x, std::size_t p) {
  if (p == 0) throw std::invalid_argument("bp_exact: p must be positive");
  std::size_t blocks = 0;
  std::size_t s = 0;
  std::vector<std::size_t> f;
  while (s < x.size()) {
    // Extend the block while its smallest period stays at most p.
    f.assign(1, 0);
    f.push_back(0);
    std::size_t e = s + 1;
    std::size_t q = 0;
    while (e < x.size()) {
      const Symbol c = x[e];
      std::size_t qq = q;
      while (qq > 0 && c != x[s + qq]) qq = f[qq];
      if (c == x[s + qq]) ++qq;
      const std::size_t len = e - s + 1;
      if (len - qq > p) break;
      q = qq;
      f.push_back(q);
      ++e;
    }
    ++blocks;
    s = e;
  }
  return blocks;
}

Span clamp_window(Span y, long long a, long long b) {
  const long long n = static_cast<long long>(y.size());
  a = std::clamp(a, 0LL, n);
  b = std::clamp(b, a, n);
  return y.subspan(static_cast<std::size_t>(a), static_cast<std::size_t>(b - a));
}

namespace {

ShiftTable td_node(Span x, Span y, const PartitionTree& tree, const TreeNode& v, int L) {
  ShiftTable out(L);
  if (tree.is_leaf(v)) {
    for (int s = -L; s <= L; ++s) {
      const auto [a, b] = tree.y_window(v, s, y.size());
      out.at(s) = static_cast<double>(ed_dp(x.subspan(v.begin, v.size()), clamp_window(y, a, b)));
    }
    return out;
  }
  for (const TreeNode& c : tree.children(v)) {
    const ShiftTable t = td_node(x, y, tree, c, L);
    for (int s = -L; s <= L; ++s) {
      double best = std::numeric_limits<double>::infinity();
      for (int s2 = -L; s2 <= L; ++s2) best = std::min(best, t.at(s2) + 2.0 * std::abs(s - s2));
      out.at(s) += best;
    }
  }
  return out;
}

}  // namespace

ShiftTable tree_distance_exact(Span x, Span y, const PartitionTree& tree, int L) {
  if (x.size() != tree.leaves()) throw std::invalid_argument("tree does not match |X|");
  if (L < 0) throw std::invalid_argument("L must be non-negative");
  return td_node(x, y, tree, tree.root(), L);
}

}  // namespace gaped
