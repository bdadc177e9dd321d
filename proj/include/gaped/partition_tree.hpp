#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace gaped {

// Values indexed by shift s in [-k, k].
struct ShiftTable {
  int k = 0;
  std::vector<double> values;

  ShiftTable() = default;
  explicit ShiftTable(int radius, double fill = 0.0) : k(radius), values(2 * radius + 1, fill) {}

  double& at(int s) { return values[static_cast<std::size_t>(s + k)]; }
  double at(int s) const { return values[static_cast<std::size_t>(s + k)]; }
  std::size_t size() const { return values.size(); }
};

struct TreeNode {
  std::size_t begin = 0;
  std::size_t end = 0;
  int depth = 0;
  std::size_t size() const { return end - begin; }
};

// Balanced arity-ell tree over n single-character leaves. Nodes are produced
// on demand so a sublinear visit never pays for the whole tree.
class PartitionTree {
 public:
  PartitionTree(std::size_t n, std::size_t arity);

  std::size_t leaves() const { return n_; }
  std::size_t arity() const { return arity_; }
  int height() const { return height_; }

  TreeNode root() const { return TreeNode{0, n_, 0}; }
  bool is_leaf(const TreeNode& v) const { return v.size() <= 1; }
  std::vector<TreeNode> children(const TreeNode& v) const;

  // Y-window [a, b) of node v at shift s, before clamping to [0, ny). The
  // rightmost nodes absorb the tail of Y so the root window is all of Y even
  // when |Y| differs from n.
  std::pair<long long, long long> y_window(const TreeNode& v, long long s, std::size_t ny) const;

  // Multiplicative accuracy and rate wiring.
  double alpha_root = 1.0;
  double alpha_decay = 1.0;
  double rate_root = 1.0;
  double alpha(const TreeNode& v) const;

 private:
  std::size_t n_;
  std::size_t arity_;
  int height_ = 0;
};

}  // namespace gaped
