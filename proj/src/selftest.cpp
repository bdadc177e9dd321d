#include "gaped/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "gaped/exact_core.hpp"
#include "gaped/periodic_ed.hpp"
#include "gaped/periodicity.hpp"
#include "gaped/rng.hpp"
#include "gaped/tree_distance.hpp"

namespace gaped {

namespace {

Str random_str(Rng& rng, std::size_t n, std::size_t sigma) {
  Str s(n);
  for (auto& c : s) c = static_cast<Symbol>('a' + rng.below(sigma));
  return s;
}

Str binary(std::uint32_t mask, std::size_t len) {
  Str s(len);
  for (std::size_t i = 0; i < len; ++i) s[i] = 'a' + ((mask >> i) & 1);
  return s;
}

Str extend(const Str& root, std::size_t n) {
  Str out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = root[i % root.size()];
  return out;
}

void check(SelfTestResult& r, bool ok, const std::string& what) {
  ++r.checked;
  if (ok) return;
  if (r.failures++ == 0) r.first_failure = what;
}

SelfTestResult lv_vs_dp(Rng& rng) {
  SelfTestResult r{"landau_vishkin_vs_dp", 0, 0, {}};
  for (int t = 0; t < 300; ++t) {
    const Str x = random_str(rng, rng.below(60), 1 + rng.below(4));
    const Str y = random_str(rng, rng.below(60), 1 + rng.below(4));
    const std::size_t truth = ed_dp(x, y);
    for (std::size_t cap = 0; cap <= 61; ++cap) {
      const auto got = ed_landau_vishkin(x, y, cap);
      check(r, truth <= cap ? got == truth : !got, to_ascii(x) + " / " + to_ascii(y));
    }
  }
  return r;
}

SelfTestResult breaks_sandwich() {
  SelfTestResult r{"breaks_bp_sandwich", 0, 0, {}};
  for (std::size_t len = 0; len <= 12; ++len) {
    for (std::uint32_t m = 0; m < (1u << len); ++m) {
      const Str x = binary(m, len);
      for (std::size_t k : {2, 3}) {
        const double b = static_cast<double>(count_breaks_exact(x, k));
        const double bp = static_cast<double>(bp_exact(x, k));
        check(r, b / 3.0 <= bp && bp <= b + 3.0, to_ascii(x));
      }
    }
  }
  return r;
}

SelfTestResult periodic_sandwich() {
  SelfTestResult r{"periodic_ed_sandwich", 0, 0, {}};
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::uint32_t a = 0; a < (1u << p); ++a) {
      for (std::uint32_t b = 0; b < (1u << p); ++b) {
        const Str P = binary(a, p), Q = binary(b, p);
        for (std::size_t n = 0; n <= 12; ++n) {
          const std::size_t ed = ed_dp(extend(P, n), extend(Q, n));
          const std::size_t mid = periodic_ed_sandwich(P, Q, n);
          check(r, ed <= mid && mid <= 3 * ed, to_ascii(P) + " / " + to_ascii(Q));
        }
      }
    }
  }
  return r;
}

SelfTestResult shift_graph(Rng& rng) {
  SelfTestResult r{"shift_graph_vs_formula", 0, 0, {}};
  for (int t = 0; t < 200; ++t) {
    const std::size_t p = 1 + rng.below(32);
    std::vector<std::size_t> e(p), f(p);
    for (auto& v : e) v = rng.below(16);
    for (auto& v : f) v = rng.below(64);
    const std::size_t d = rng.below(8);
    const auto got = combine_shift_graph(e, f, d);
    bool ok = true;
    for (std::size_t i = 0; i < p; ++i) {
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (std::size_t j = 0; j < p; ++j) {
        const std::size_t gap = i > j ? i - j : j - i;
        best = std::min(best, d * e[j] + 2 * std::min(gap, p - gap) + f[i]);
      }
      ok = ok && got[i] == best;
    }
    check(r, ok, "p=" + std::to_string(p));
  }
  return r;
}

SelfTestResult min_plus(Rng& rng) {
  SelfTestResult r{"range_min_plus_vs_brute", 0, 0, {}};
  for (int t = 0; t < 1000; ++t) {
    ShiftTable a(static_cast<int>(rng.below(32)));
    for (auto& v : a.values) v = static_cast<double>(rng.below(100));
    const ShiftTable b = range_min_plus(a);
    bool ok = true;
    for (int s = -a.k; s <= a.k; ++s) {
      double best = std::numeric_limits<double>::infinity();
      for (int s2 = -a.k; s2 <= a.k; ++s2) best = std::min(best, a.at(s2) + 2.0 * std::abs(s - s2));
      ok = ok && b.at(s) == best;
    }
    check(r, ok, "k=" + std::to_string(a.k));
  }
  return r;
}

SelfTestResult degenerate_tree(Rng& rng) {
  SelfTestResult r{"degenerate_tree_vs_exact", 0, 0, {}};
  SolverOptions opts;
  opts.degenerate = true;
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng.below(40);
    const Str x = random_str(rng, n, 3);
    Str y = random_str(rng, n + rng.below(3), 3);
    std::copy(x.begin(), x.begin() + static_cast<long>(std::min(n, y.size()) / 2), y.begin());
    const int k = static_cast<int>(rng.below(4));
    const PartitionTree tree = build_tree(n, 2 + rng.below(2), 10, 3.0);
    auto counter = std::make_shared<QueryCounter>();
    const QueriedString qx(x, counter, 'X');
    const QueriedString qy(y, counter, 'Y');
    TreeSolveParams prm;
    prm.k = k;
    const auto got = solve_tree(qx, qy, tree, prm, rng, opts);
    check(r, got.root.values == tree_distance_exact(x, y, tree, k).values, to_ascii(x));
  }
  return r;
}

}  // namespace

std::vector<SelfTestResult> run_selftests(unsigned long long seed) {
  Rng rng(seed);
  std::vector<SelfTestResult> out;
  out.push_back(lv_vs_dp(rng));
  out.push_back(breaks_sandwich());
  out.push_back(periodic_sandwich());
  out.push_back(shift_graph(rng));
  out.push_back(min_plus(rng));
  out.push_back(degenerate_tree(rng));
  return out;
}

}  // namespace gaped
