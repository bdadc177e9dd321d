#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "gaped/exact_core.hpp"
#include "gaped/harness.hpp"
#include "gaped/tree_distance.hpp"

namespace gaped {
namespace {

ShiftTable table(std::vector<double> v) {
  ShiftTable t(static_cast<int>(v.size() / 2));
  t.values = std::move(v);
  return t;
}

ShiftTable min_plus_brute(const ShiftTable& a) {
  ShiftTable b(a.k);
  for (int s = -a.k; s <= a.k; ++s) {
    double best = std::numeric_limits<double>::infinity();
    for (int s2 = -a.k; s2 <= a.k; ++s2) best = std::min(best, a.at(s2) + 2.0 * std::abs(s - s2));
    b.at(s) = best;
  }
  return b;
}

Str random_str(Rng& rng, std::size_t n, std::size_t sigma) {
  Str s(n);
  for (auto& c : s) c = static_cast<Symbol>('a' + rng.below(sigma));
  return s;
}

struct Pair {
  std::shared_ptr<QueryCounter> counter = std::make_shared<QueryCounter>();
  QueriedString x, y;
  Pair(Str a, Str b) : x(std::move(a), counter, 'X'), y(std::move(b), counter, 'Y') {}
};

TEST(RangeMinPlus, Examples) {
  EXPECT_EQ(range_min_plus(table({5, 0, 5})).values, (std::vector<double>{2, 0, 2}));
  EXPECT_EQ(range_min_plus(table({0, 0, 0})).values, (std::vector<double>{0, 0, 0}));
  EXPECT_EQ(range_min_plus(table({0, 100, 100})).values, (std::vector<double>{0, 2, 4}));
}

TEST(RangeMinPlus, MatchesBruteForce) {
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    ShiftTable a(static_cast<int>(rng.below(20)));
    for (auto& v : a.values) v = static_cast<double>(rng.below(60));
    ASSERT_EQ(range_min_plus(a).values, min_plus_brute(a).values);
  }
}

TEST(BuildTree, Structure) {
  const Constants c;
  const PartitionTree t1 = build_tree(1, 2, 10, 3.0, c);
  EXPECT_TRUE(t1.is_leaf(t1.root()));
  EXPECT_EQ(t1.height(), 0);

  const PartitionTree t8 = build_tree(8, 2, 10, 3.0, c);
  EXPECT_EQ(t8.height(), 3);
  std::vector<TreeNode> level{t8.root()};
  for (int d = 0; d < 3; ++d) {
    std::vector<TreeNode> next;
    for (const auto& v : level) {
      for (const auto& w : t8.children(v)) next.push_back(w);
    }
    level = next;
  }
  ASSERT_EQ(level.size(), 8u);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(level[i].begin, i);
    EXPECT_EQ(level[i].size(), 1u);
  }

  const PartitionTree t9 = build_tree(9, 3, 10, 3.0, c);
  EXPECT_EQ(t9.height(), 2);
  const auto kids = t9.children(t9.root());
  ASSERT_EQ(kids.size(), 3u);
  for (const auto& w : kids) EXPECT_EQ(w.size(), 3u);
}

TEST(BuildTree, AccuracyAndRateWiring) {
  const Constants c;
  const PartitionTree t = build_tree(1024, 4, 100, 3.0, c);
  EXPECT_DOUBLE_EQ(t.alpha_root, 30.0);
  EXPECT_DOUBLE_EQ(t.rate_root, 10000.0 * 9.0 / 100.0);
  EXPECT_DOUBLE_EQ(t.alpha_decay, 1.0 - 1.0 / 20.0);
}

TEST(ChooseArity, ClampedToRange) {
  const Constants c;
  EXPECT_EQ(choose_arity(2, 2, c), 2u);
  EXPECT_EQ(choose_arity(1 << 16, 1 << 16, c), 16u);
  EXPECT_EQ(choose_arity(1 << 16, 2, c), c.arity_max);
  EXPECT_GE(choose_arity(100, 10, c), 2u);
}

// ED <= TD <= (2 (ell - 1) h + 1) ED whenever ED <= L.
TEST(TreeDistance, SandwichesEditDistance) {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(40);
    const Str x = random_str(rng, n, 3);
    const Str y = apply_random_edits(x, rng.below(5), 3, rng);
    const std::size_t ell = 2 + rng.below(2);
    const PartitionTree tree(n, ell);
    const std::size_t ed = ed_dp(x, y);
    const int L = static_cast<int>(ed + rng.below(3));
    const double td = tree_distance_exact(x, y, tree, L).at(0);
    ASSERT_GE(td, static_cast<double>(ed));
    ASSERT_LE(td, static_cast<double>((2 * (ell - 1) * tree.height() + 1) * ed));
  }
}

TEST(SolveTree, DegenerateModeEqualsTreeDistance) {
  Rng rng(3);
  SolverOptions opts;
  opts.degenerate = true;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng.below(48);
    const Str x = random_str(rng, n, 2 + rng.below(3));
    const Str y = apply_random_edits(x, rng.below(6), 4, rng);
    const int k = static_cast<int>(rng.below(5));
    const std::size_t ell = 2 + rng.below(2);
    const PartitionTree tree = build_tree(n, ell, 10, 3.0);
    Pair pr(x, y);
    TreeSolveParams prm;
    prm.k = k;
    prm.p = 4;
    const auto got = solve_tree(pr.x, pr.y, tree, prm, rng, opts);
    ASSERT_EQ(got.root.values, tree_distance_exact(x, y, tree, k).values);
  }
}

TEST(SolveTree, LeafMatchingItsWindowIsZero) {
  Pair pr(from_ascii("q"), from_ascii("q"));
  const PartitionTree tree = build_tree(1, 2, 10, 3.0);
  TreeSolveParams prm;
  prm.k = 0;
  Rng rng(0);
  const auto r = solve_tree(pr.x, pr.y, tree, prm, rng);
  EXPECT_EQ(r.root.at(0), 0.0);
  EXPECT_EQ(r.stats.leaves, 1u);
}

TEST(SolveTree, NodePassingBothTestersIsPruned) {
  std::string s;
  for (int i = 0; i < 64; ++i) s += "abc";
  Pair pr(from_ascii(s), from_ascii(s));
  const PartitionTree tree = build_tree(s.size(), 4, 10, 3.0);
  TreeSolveParams prm;
  prm.k = 0;
  prm.p = 3;
  prm.delta = 2;
  Rng rng(0);
  const auto r = solve_tree(pr.x, pr.y, tree, prm, rng);
  EXPECT_EQ(r.stats.active, 1u);
  EXPECT_EQ(r.stats.pruned, 1u);
  EXPECT_EQ(r.stats.leaves, 0u);
  EXPECT_EQ(r.root.at(0), 0.0);
}

TEST(SmallBp, EqualPeriodicStringsAreClose) {
  std::string s;
  for (int i = 0; i < 256; ++i) s += "abcd";
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Pair pr(from_ascii(s), from_ascii(s));
    Rng rng(seed);
    const auto d = alg_small_bp(pr.x, pr.y, 1, 64, 4, 1, 4, rng);
    EXPECT_EQ(d.verdict, Verdict::Close);
  }
}

// K/k must clear the tree-distance distortion (2 (ell - 1) h + 1) times
// gamma / far_threshold; Delta = n gives ell = 13, h = 4 here.
class SmallBpStatistics : public ::testing::Test {
 protected:
  static constexpr std::size_t kN = 8192;
  static constexpr int kK = 2;
  static constexpr std::size_t kBigK = 6000;
};

TEST_F(SmallBpStatistics, PeriodicVersusRandomIsFar) {
  Rng gen(10);
  int far = 0;
  const int runs = 100;
  Str x(kN);
  for (std::size_t i = 0; i < kN; ++i) x[i] = static_cast<Symbol>("wxyz"[i % 4]);
  const Str y = random_str(gen, kN, 26);
  ASSERT_GT(ed_dp(x, y), kBigK);
  for (int t = 0; t < runs; ++t) {
    Pair pr(x, y);
    Rng rng(100 + t);
    far += alg_small_bp(pr.x, pr.y, kK, kBigK, 4, 2, kN, rng).verdict == Verdict::Far;
  }
  EXPECT_GE(far, 80);
}

TEST_F(SmallBpStatistics, PlantedDistanceKIsClose) {
  Rng gen(11);
  int close = 0;
  const int runs = 100;
  for (int t = 0; t < runs; ++t) {
    const Str x = random_str(gen, kN, 26);
    Str y;
    do {
      y = apply_random_edits(x, kK, 26, gen);
    } while (ed_landau_vishkin(x, y, kK) != std::optional<std::size_t>(kK));
    Pair pr(x, y);
    Rng rng(200 + t);
    close += alg_small_bp(pr.x, pr.y, kK, kBigK, kK, kN, kN, rng).verdict == Verdict::Close;
  }
  EXPECT_GE(close, 80);
}

TEST(SmallBp, ExhaustedBudgetReportsFar) {
  Rng gen(12);
  const Str x = random_str(gen, 512, 4);
  Pair pr(x, x);
  SolverOptions opts;
  opts.budget_multiplier = 1e-9;
  Rng rng(0);
  const auto d = alg_small_bp(pr.x, pr.y, 2, 64, 2, 512, 4, rng, opts);
  EXPECT_EQ(d.verdict, Verdict::Far);
  EXPECT_EQ(d.diagnostics.at("small_bp.interrupted"), 1.0);
}

TEST(SmallBp, RequiresSharedCounter) {
  const auto x = QueriedString::oracle(from_ascii("abcd"));
  Rng rng(0);
  EXPECT_THROW(alg_small_bp(x, x, 1, 8, 1, 4, 2, rng), std::invalid_argument);
}

TEST(SmallBp, SameSeedSameResult) {
  Rng gen(13);
  const Str x = random_str(gen, 1024, 8);
  const Str y = apply_random_edits(x, 3, 8, gen);
  Pair a(x, y), b(x, y);
  Rng r1(5), r2(5);
  const auto d1 = alg_small_bp(a.x, a.y, 3, 200, 3, 1024, 8, r1);
  const auto d2 = alg_small_bp(b.x, b.y, 3, 200, 3, 1024, 8, r2);
  EXPECT_EQ(d1.verdict, d2.verdict);
  EXPECT_EQ(d1.queries, d2.queries);
  EXPECT_EQ(d1.diagnostics, d2.diagnostics);
}

}  // namespace
}  // namespace gaped
