#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "gaped/exact_core.hpp"
#include "gaped/property_testers.hpp"

namespace gaped {
namespace {

Str random_str(Rng& rng, std::size_t n, std::size_t sigma) {
  Str s(n);
  for (auto& c : s) c = static_cast<Symbol>(rng.below(sigma));
  return s;
}

// Shifts s in [-k, k] with Y[k+s, k+s+|X|) = X, by direct comparison.
std::vector<int> exact_shifts(const Str& x, const Str& y, int k) {
  std::vector<int> out;
  for (int s = -k; s <= k; ++s) {
    const std::size_t a = static_cast<std::size_t>(k + s);
    if (a + x.size() > y.size()) continue;
    if (std::equal(x.begin(), x.end(), y.begin() + static_cast<long>(a))) out.push_back(s);
  }
  return out;
}

TEST(EqualityTest, EqualStringsAreAlwaysClose) {
  Rng gen(1);
  const auto x = QueriedString::oracle(random_str(gen, 500, 4));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    EXPECT_EQ(equality_test(x.whole(), x.whole(), 0.01, 0.1, rng).kind, Verdict::Close);
  }
}

TEST(EqualityTest, TotallyDifferentStringsAreFar) {
  const auto x = QueriedString::oracle(Str(100, 0));
  const auto y = QueriedString::oracle(Str(100, 1));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const auto v = equality_test(x.whole(), y.whole(), 1.0, 0.01, rng);
    EXPECT_EQ(v.kind, Verdict::Far);
    ASSERT_TRUE(v.mismatch.has_value());
  }
}

TEST(EqualityTest, DetectsHammingDistanceTwoOverRate) {
  const std::size_t n = 2000;
  const double r = 0.01, delta = 0.05;
  Rng gen(4);
  const Str xs = random_str(gen, n, 8);
  Str ys = xs;
  // HD = 2 / r.
  for (std::size_t i = 0; i < 200; ++i) ys[i * 10] = (ys[i * 10] + 1) % 8;
  ASSERT_EQ(hamming(xs, ys), 200u);
  const auto x = QueriedString::oracle(xs);
  const auto y = QueriedString::oracle(ys);
  int far = 0;
  const int runs = 500;
  for (int t = 0; t < runs; ++t) {
    Rng rng(1000 + t);
    far += equality_test(x.whole(), y.whole(), r, delta, rng).kind == Verdict::Far;
  }
  EXPECT_GE(far, static_cast<int>((1.0 - delta - 0.05) * runs));
}

TEST(EqualityTest, SampleCountFallsBackToFullScan) {
  EXPECT_EQ(equality_sample_count(100, 1.0, 0.01), 100u);
  EXPECT_EQ(equality_sample_count(1000, 0.01, std::exp(-1.0)), 10u);
}

TEST(MatchingTest, PlantedUniqueCopyIsFoundAtItsShift) {
  Rng gen(2);
  const int k = 6;
  for (int t = 0; t < 50; ++t) {
    const Str xs = random_str(gen, 64, 256);
    const int plant = static_cast<int>(gen.below(2 * k + 1)) - k;
    Str ys = random_str(gen, xs.size() + 2 * k, 256);
    std::copy(xs.begin(), xs.end(), ys.begin() + (k + plant));
    const auto shifts = exact_shifts(xs, ys, k);
    ASSERT_EQ(shifts, std::vector<int>{plant});
    const auto x = QueriedString::oracle(xs);
    const auto y = QueriedString::oracle(ys);
    Rng rng(t);
    const auto v = matching_test(x.whole(), y.whole(), k, 0.1, 0.01, rng);
    ASSERT_EQ(v.kind, Verdict::Close);
    EXPECT_EQ(*v.shift, plant);
  }
}

TEST(MatchingTest, IndependentRandomIsFar) {
  Rng gen(3);
  const int k = 8;
  for (int t = 0; t < 50; ++t) {
    const Str xs = random_str(gen, 100, 256);
    const Str ys = random_str(gen, xs.size() + 2 * k, 256);
    ASSERT_TRUE(exact_shifts(xs, ys, k).empty());
    const auto x = QueriedString::oracle(xs);
    const auto y = QueriedString::oracle(ys);
    Rng rng(t);
    EXPECT_EQ(matching_test(x.whole(), y.whole(), k, 0.1, 0.01, rng).kind, Verdict::Far);
  }
}

TEST(MatchingTest, PeriodicPlantReturnsAnExactShift) {
  const Str xs = from_ascii("abababababababab");
  const int k = 4;
  Str ys = from_ascii("zzzzzzzzzzzzzzzzzzzzzzzz");
  ASSERT_EQ(ys.size(), xs.size() + 2 * k);
  std::copy(xs.begin(), xs.end(), ys.begin() + (k + 3));
  const auto ok = exact_shifts(xs, ys, k);
  const auto x = QueriedString::oracle(xs);
  const auto y = QueriedString::oracle(ys);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const auto v = matching_test(x.whole(), y.whole(), k, 1.0, 0.01, rng);
    ASSERT_EQ(v.kind, Verdict::Close);
    EXPECT_NE(std::find(ok.begin(), ok.end(), *v.shift), ok.end());
  }
}

TEST(MatchingTest, ExhaustiveModeIsExact) {
  Rng gen(5);
  for (int t = 0; t < 200; ++t) {
    const int k = static_cast<int>(gen.below(4));
    const Str xs = random_str(gen, 1 + gen.below(6), 2);
    const Str ys = random_str(gen, xs.size() + 2 * k, 2);
    const auto shifts = exact_shifts(xs, ys, k);
    const auto x = QueriedString::oracle(xs);
    const auto y = QueriedString::oracle(ys);
    Rng rng(t);
    const auto v = matching_test(x.whole(), y.whole(), k, 1.0, 0.01, rng, true);
    ASSERT_EQ(v.kind == Verdict::Close, !shifts.empty());
    // Tie order prefers 0, then -1, 1, -2, 2 ...
    if (!shifts.empty()) {
      int best = shifts.front();
      for (int s : shifts) {
        if (std::abs(s) < std::abs(best) || (std::abs(s) == std::abs(best) && s < best)) best = s;
      }
      EXPECT_EQ(*v.shift, best);
    }
  }
}

TEST(MatchingTest, RejectsWrongLengths) {
  const auto x = QueriedString::oracle(Str(5, 0));
  const auto y = QueriedString::oracle(Str(6, 0));
  Rng rng(0);
  EXPECT_THROW(matching_test(x.whole(), y.whole(), 1, 1.0, 0.1, rng), std::invalid_argument);
}

TEST(PeriodicityTest, PeriodicStringReturnsItsRoot) {
  const auto x = QueriedString::oracle(from_ascii(std::string(100, 'a')));
  std::string ab;
  for (int i = 0; i < 50; ++i) ab += "ab";
  const auto y = QueriedString::oracle(from_ascii(ab));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto v = periodicity_test(y.whole(), 2, 0.1, 0.01, rng);
    ASSERT_EQ(v.kind, Verdict::Close);
    EXPECT_EQ(*v.period, from_ascii("ab"));
    EXPECT_EQ(*periodicity_test(x.whole(), 2, 0.1, 0.01, rng).period, from_ascii("a"));
  }
}

TEST(PeriodicityTest, AperiodicStringIsFar) {
  // A rotation of the binary de Bruijn sequence of order 4.
  const Str s = from_ascii("0100110101111000");
  ASSERT_GT(period(s), 2u);
  ASSERT_GT(period(Span(s).first(4)), 2u);
  const auto x = QueriedString::oracle(s);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    EXPECT_EQ(periodicity_test(x.whole(), 2, 0.1, 0.01, rng).kind, Verdict::Far);
  }
}

TEST(PeriodicityTest, LateCorruptionIsCaughtAtFullRate) {
  Str s;
  for (int i = 0; i < 200; ++i) s.push_back(i % 3);
  s[150] = 7;
  const auto x = QueriedString::oracle(s);
  Rng rng(0);
  const auto v = periodicity_test(x.whole(), 3, 1.0, 0.01, rng);
  ASSERT_EQ(v.kind, Verdict::Far);
  EXPECT_EQ(*v.mismatch, 150u);
}

TEST(PeriodicityTest, ShortStringUsesItsOwnRoot) {
  const auto x = QueriedString::oracle(from_ascii("abaab"));
  Rng rng(0);
  const auto v = periodicity_test(x.whole(), 8, 0.1, 0.01, rng);
  ASSERT_EQ(v.kind, Verdict::Close);
  EXPECT_EQ(*v.period, from_ascii("aba"));
}

}  // namespace
}  // namespace gaped
