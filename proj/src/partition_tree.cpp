#include "gaped/partition_tree.hpp"

#include <cmath>
#include <stdexcept>

namespace gaped {

PartitionTree::PartitionTree(std::size_t n, std::size_t arity) : n_(n), arity_(arity) {
  if (n == 0) throw std::invalid_argument("partition tree needs at least one leaf");
  if (arity < 2) throw std::invalid_argument("partition tree arity must be at least 2");
  // The first child is always a largest one, so follow it down.
  TreeNode v = root();
  while (!is_leaf(v)) {
    v = children(v).front();
    ++height_;
  }
}

std::vector<TreeNode> PartitionTree::children(const TreeNode& v) const {
  std::vector<TreeNode> out;
  const std::size_t len = v.size();
  if (len <= 1) return out;
  const std::size_t parts = len < arity_ ? len : arity_;
  const std::size_t base = len / parts;
  const std::size_t extra = len % parts;
  std::size_t at = v.begin;
  out.reserve(parts);
  for (std::size_t i = 0; i < parts; ++i) {
    const std::size_t w = base + (i < extra ? 1 : 0);
    out.push_back(TreeNode{at, at + w, v.depth + 1});
    at += w;
  }
  return out;
}

std::pair<long long, long long> PartitionTree::y_window(const TreeNode& v, long long s,
                                                        std::size_t ny) const {
  const long long a = static_cast<long long>(v.begin) + s;
  const long long e = v.end == n_ ? static_cast<long long>(ny) : static_cast<long long>(v.end);
  return {a, e + s};
}

double PartitionTree::alpha(const TreeNode& v) const {
  return alpha_root * std::pow(alpha_decay, v.depth);
}

}  // namespace gaped
