#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <memory>

#include "gaped/exact_core.hpp"
#include "gaped/rng.hpp"

namespace gaped {
namespace {

Str S(const std::string& s) { return from_ascii(s); }

Str random_str(Rng& rng, std::size_t n, std::size_t sigma) {
  Str s(n);
  for (auto& c : s) c = static_cast<Symbol>('a' + rng.below(sigma));
  return s;
}

// Smallest q with x[i] = x[i+q] for all i, by direct check.
std::size_t naive_period(const Str& x) {
  for (std::size_t q = 1; q < x.size(); ++q) {
    bool ok = true;
    for (std::size_t i = 0; i + q < x.size() && ok; ++i) ok = x[i] == x[i + q];
    if (ok) return q;
  }
  return x.size();
}

// Minimum pieces over every partition into substrings of period <= p.
std::size_t bp_enumerate(const Str& x, std::size_t p) {
  const std::size_t n = x.size();
  std::vector<std::size_t> best(n + 1, std::numeric_limits<std::size_t>::max());
  best[0] = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Str piece(x.begin() + static_cast<long>(i), x.begin() + static_cast<long>(j));
      if (naive_period(piece) <= p && best[i] != std::numeric_limits<std::size_t>::max()) {
        best[j] = std::min(best[j], best[i] + 1);
      }
    }
  }
  return best[n];
}

TEST(ExactCore, EdDpExamples) {
  EXPECT_EQ(ed_dp(S(""), S("")), 0u);
  EXPECT_EQ(ed_dp(S("abc"), S("")), 3u);
  EXPECT_EQ(ed_dp(S("kitten"), S("sitting")), 3u);
}

TEST(ExactCore, LandauVishkinExamples) {
  EXPECT_EQ(ed_landau_vishkin(S("abab"), S("abab"), 0), std::optional<std::size_t>(0));
  EXPECT_EQ(ed_landau_vishkin(S("kitten"), S("sitting"), 2), std::nullopt);
  EXPECT_EQ(ed_landau_vishkin(S("kitten"), S("sitting"), 3), std::optional<std::size_t>(3));
}

TEST(ExactCore, LandauVishkinMatchesDpOnRandomPairs) {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const Str x = random_str(rng, rng.below(40), 1 + rng.below(3));
    const Str y = random_str(rng, rng.below(40), 1 + rng.below(3));
    const std::size_t truth = ed_dp(x, y);
    for (std::size_t cap = 0; cap <= 42; cap += 3) {
      const auto got = ed_landau_vishkin(x, y, cap);
      if (truth <= cap) {
        ASSERT_EQ(got, std::optional<std::size_t>(truth));
      } else {
        ASSERT_EQ(got, std::nullopt);
      }
    }
    ASSERT_EQ(ed_lv_doubling(x, y), truth);
  }
}

TEST(ExactCore, Hamming) {
  EXPECT_EQ(hamming(S("abc"), S("abc")), 0u);
  EXPECT_EQ(hamming(S("abc"), S("abd")), 1u);
  EXPECT_EQ(hamming(S("aaaa"), S("bbbb")), 4u);
}

TEST(ExactCore, PeriodExamplesAndOracle) {
  EXPECT_EQ(period(S("aaaa")), 1u);
  EXPECT_EQ(period(S("abab")), 2u);
  EXPECT_EQ(period(S("abc")), 3u);
  Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    const Str x = random_str(rng, 1 + rng.below(30), 2);
    ASSERT_EQ(period(x), naive_period(x));
  }
}

TEST(ExactCore, FindOccurrences) {
  const auto find = [](const std::string& p, const std::string& t) {
    const auto q = QueriedString::oracle(S(t));
    return find_occurrences(S(p), q.whole());
  };
  EXPECT_EQ(find("ab", "abab"), (std::vector<std::size_t>{0, 2}));
  EXPECT_TRUE(find("aa", "bbbb").empty());
  EXPECT_EQ(find("aba", "ababa"), (std::vector<std::size_t>{0, 2}));
}

TEST(ExactCore, FindOccurrencesReadsWindowOnce) {
  auto c = std::make_shared<QueryCounter>();
  const QueriedString t(S("abababab"), c);
  find_occurrences(S("ab"), t.whole());
  EXPECT_EQ(c->queries(), 8u);
}

TEST(ExactCore, BpExactExamplesAndEnumeration) {
  EXPECT_EQ(bp_exact(S("aaaa"), 1), 1u);
  EXPECT_EQ(bp_exact(S("ababbaba"), 2), 2u);
  EXPECT_EQ(bp_exact(S("abcabc"), 3), 1u);
  Rng rng(5);
  for (int t = 0; t < 400; ++t) {
    const Str x = random_str(rng, 1 + rng.below(12), 2 + rng.below(2));
    const std::size_t p = 1 + rng.below(4);
    ASSERT_EQ(bp_exact(x, p), bp_enumerate(x, p)) << to_ascii(x) << " p=" << p;
  }
}

TEST(ExactCore, TreeDistanceExamples) {
  const PartitionTree t8(8, 2);
  const Str x = S("abcdabcd");
  EXPECT_EQ(tree_distance_exact(x, x, t8, 0).at(0), 0.0);
  const PartitionTree t2(2, 2);
  EXPECT_EQ(tree_distance_exact(S("ab"), S("ba"), t2, 1).at(0), 2.0);
}

TEST(ExactCore, ClampWindow) {
  const Str y = S("abcdef");
  EXPECT_EQ(clamp_window(y, -3, 2).size(), 2u);
  EXPECT_EQ(clamp_window(y, 4, 99).size(), 2u);
  EXPECT_EQ(clamp_window(y, 5, 2).size(), 0u);
}

}  // namespace
}  // namespace gaped
