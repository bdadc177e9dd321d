#include "gaped/gap_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gaped/exact_core.hpp"
#include "gaped/periodicity.hpp"
#include "gaped/property_testers.hpp"
#include "gaped/tree_distance.hpp"

namespace gaped {

namespace {

double lg(double x) { return std::max(1.0, std::log2(std::max(x, 1.0))); }

std::uint64_t to_limit(double v) {
  if (!(v < 1.8e19)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::max(v, 1.0));
}

void merge(GapDecision& into, const GapDecision& from) {
  for (const auto& [key, v] : from.diagnostics) into.diagnostics[key] += v;
}

QueryCounter& counter_of(const QueriedString& x, const QueriedString& y) {
  if (!x.charged() || x.counter() != y.counter()) {
    throw std::invalid_argument("X and Y must share one charged counter");
  }
  return *x.counter();
}

Str read_all(const QueriedString& s) { return s.whole().materialize(); }

}  // namespace

SplitResult split(const QueriedString& x, const QueriedString& y, int k, std::size_t K, double delta, Rng& rng) {
  if (k < 1 || K < static_cast<std::size_t>(k)) throw std::invalid_argument("split: need 1 <= k <= K");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("split: delta must lie in (0, 1]");
  const std::size_t kb = std::max<std::size_t>(2, static_cast<std::size_t>(k));
  const std::size_t half = kb / 2;
  SplitResult out;
  out.cuts_x.push_back(0);
  out.cuts_y.push_back(0);
  const auto breaks = sample_breaks(x.whole(), kb, std::max(K, kb), delta, rng);
  out.sampled_breaks = breaks.size();
  for (std::size_t i : breaks) {
    const Str pattern = x.slice(static_cast<long long>(i), static_cast<long long>(i + 3 * kb)).materialize();
    const Fragment window =
        y.slice(static_cast<long long>(i) - static_cast<long long>(half), static_cast<long long>(i + half + 3 * kb));
    std::size_t j = i;
    for (std::size_t o : find_occurrences(pattern, window)) {
      const std::size_t z = window.start() + o;
      if ((z > i ? z - i : i - z) <= half) {
        j = z;
        break;
      }
    }
    // Keep both cut lists strictly increasing; a cut that would not is dropped.
    if (i > out.cuts_x.back() && j > out.cuts_y.back() && i < x.size() && j < y.size()) {
      out.cuts_x.push_back(i);
      out.cuts_y.push_back(j);
    }
  }
  out.cuts_x.push_back(x.size());
  out.cuts_y.push_back(y.size());
  return out;
}

std::vector<int> rung_ladder(int k) {
  std::vector<int> out{0};
  for (int d = 1; d < k; d *= 2) out.push_back(d);
  if (k >= 1) out.push_back(k);
  return out;
}

std::vector<std::size_t> level_ladder(std::size_t K) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d < K; d *= 2) out.push_back(d);
  out.push_back(std::max<std::size_t>(K, 1));
  return out;
}

LadderOutcome precision_ladder(std::size_t pieces, std::size_t K, const Constants& c, Rng& rng,
                               const std::function<Verdict(std::size_t, std::size_t)>& solve) {
  const double log_k = lg(static_cast<double>(K));
  const double delta_p = c.piece_delta / log_k;
  const double ln_inv = std::log(1.0 / delta_p);
  const double need = c.far_count * ln_inv;
  LadderOutcome out;
  for (std::size_t d : level_ladder(K)) {
    const double prob =
        std::min(1.0, c.piece_rate * static_cast<double>(d) * log_k * ln_inv / static_cast<double>(std::max<std::size_t>(K, 1)));
    std::size_t far = 0;
    for (std::size_t i = 0; i < pieces; ++i) {
      if (!rng.bernoulli(prob)) continue;
      ++out.subcalls;
      if (solve(i, d) == Verdict::Far && static_cast<double>(++far) >= need) {
        out.verdict = Verdict::Far;
        out.stopped_at = d;
        return out;
      }
    }
  }
  return out;
}

std::size_t descent_period(int k, std::size_t K, std::size_t n_piece, const Constants& c) {
  const double want = std::ceil(c.sub_period * static_cast<double>(k) * lg(static_cast<double>(K)));
  const double cap = static_cast<double>(std::max<std::size_t>(n_piece, 1));
  return static_cast<std::size_t>(std::max(1.0, std::min(want, cap)));
}

void check_descent(std::size_t p, std::size_t p_child, std::size_t delta) {
  const double bound = static_cast<double>(p) / std::sqrt(static_cast<double>(std::max<std::size_t>(delta, 1)));
  if (!(static_cast<double>(p_child) <= bound) || p_child >= p) {
    throw std::logic_error("recursion period did not shrink by sqrt(Delta)");
  }
}

GapDecision alg_main(const QueriedString& x, const QueriedString& y, int k, std::size_t K, std::size_t p,
                     std::size_t delta, Rng& rng, const SolverOptions& opts) {
  if (k < 0) throw std::invalid_argument("alg_main: k must be non-negative");
  QueryCounter& counter = counter_of(x, y);
  const Constants& c = opts.constants;
  const std::size_t n_tot = x.size() + y.size();
  GapDecision out;
  out.seed = rng.seed();
  const std::uint64_t units0 = counter.units();
  auto finish = [&](Verdict v) {
    out.verdict = v;
    out.queries = counter.queries();
    out.budget_spent = counter.units() - units0;
    return out;
  };

  if (K > n_tot) {
    out.add("main.large_K", 1);
    return finish(Verdict::Close);
  }
  if (n_tot < 4) {
    const Str xs = read_all(x);
    const Str ys = read_all(y);
    out.add("main.tiny", 1);
    return finish(ed_dp(xs, ys) <= static_cast<std::size_t>(k) ? Verdict::Close : Verdict::Far);
  }
  if (k == 0) {
    out.add("main.equality", 1);
    if (x.size() != y.size()) return finish(Verdict::Far);
    const TesterVerdict t =
        equality_test(x.whole(), y.whole(), 1.0 / static_cast<double>(K), c.equality_delta, rng);
    return finish(t.kind);
  }
  const std::size_t ku = static_cast<std::size_t>(k);
  if (p <= ku * delta) {
    const std::size_t d_tree = std::clamp<std::size_t>(delta, 2, std::max<std::size_t>(x.size(), 2));
    GapDecision g = alg_small_bp(x, y, k, K, ku * delta, K * delta, d_tree, rng, opts);
    merge(out, g);
    return finish(g.verdict);
  }

  Rng split_rng = rng.derive("split");
  const SplitResult sp = split(x, y, k, K, c.split_delta, split_rng);
  out.add("split.calls", 1);
  out.add("split.pieces", static_cast<double>(sp.pieces()));
  out.add("split.breaks", static_cast<double>(sp.sampled_breaks));
  const double log_k = lg(static_cast<double>(K));
  const double sub_delta = c.boosted_delta / (static_cast<double>(n_tot) * static_cast<double>(n_tot));
  Rng ladder_rng = rng.derive("ladder");
  const LadderOutcome lo = precision_ladder(sp.pieces(), K, c, ladder_rng, [&](std::size_t i, std::size_t d) {
    const QueriedString xi = x.view(static_cast<long long>(sp.cuts_x[i]), static_cast<long long>(sp.cuts_x[i + 1]));
    const QueriedString yi = y.view(static_cast<long long>(sp.cuts_y[i]), static_cast<long long>(sp.cuts_y[i + 1]));
    const int k_sub = static_cast<int>(std::floor(static_cast<double>(d) * static_cast<double>(k) /
                                                  static_cast<double>(K) * c.sub_gap * log_k));
    const std::size_t p_sub = descent_period(k, K, xi.size() + yi.size(), c);
    check_descent(p, p_sub, delta);
    Rng sub = rng.derive("piece", static_cast<std::uint64_t>(i) * 64 + static_cast<std::uint64_t>(std::log2(d)));
    const GapDecision g = alg_boosted(xi, yi, k_sub, d, p_sub, delta, sub_delta, sub, opts);
    merge(out, g);
    return g.verdict;
  });
  out.add("ladder.subcalls", static_cast<double>(lo.subcalls));
  return finish(lo.verdict);
}

std::size_t boosted_trials(int k, double fail_prob, const Constants& c) {
  const double lk = std::max(2.0, std::log2(std::max(2.0, static_cast<double>(k))));
  return static_cast<std::size_t>(std::max(1.0, std::ceil(c.trials_factor * std::log(lk / fail_prob))));
}

double boosted_budget(std::size_t n_total, int k_rung, std::size_t K, std::size_t p, std::size_t delta,
                      const SolverOptions& opts) {
  const Constants& c = opts.constants;
  const double n = static_cast<double>(std::max<std::size_t>(n_total, 2));
  const double d = static_cast<double>(std::max<std::size_t>(delta, 2));
  const double kk = static_cast<double>(std::max<std::size_t>(K, 1));
  const double base = n / kk * d + static_cast<double>(k_rung) * kk * d * d * d;
  const double ln = lg(n);
  const double poly = std::pow(ln, c.boosted_time_exponent * std::log(n) / std::log(d)) *
                      std::pow(ln, 14.0 * std::log(static_cast<double>(std::max<std::size_t>(p, 1))) / std::log(d));
  return c.boosted_budget_factor * base * poly * opts.budget_multiplier;
}

GapDecision alg_boosted(const QueriedString& x, const QueriedString& y, int k, std::size_t K, std::size_t p,
                        std::size_t delta, double fail_prob, Rng& rng, const SolverOptions& opts) {
  if (k < 0) throw std::invalid_argument("alg_boosted: k must be non-negative");
  if (!(fail_prob > 0.0 && fail_prob < 1.0)) throw std::invalid_argument("alg_boosted: delta must lie in (0, 1)");
  QueryCounter& counter = counter_of(x, y);
  const std::size_t n_tot = x.size() + y.size();
  const std::size_t trials = boosted_trials(k, fail_prob, opts.constants);
  GapDecision out;
  out.seed = rng.seed();
  const std::uint64_t units0 = counter.units();
  out.add("boosted.calls", 1);
  out.verdict = Verdict::Far;

  const auto ladder = rung_ladder(k);
  for (std::size_t rung = 0; rung < ladder.size() && out.verdict == Verdict::Far; ++rung) {
    const int kt = ladder[rung];
    std::size_t close = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      QueryBudget budget;
      budget.limit = to_limit(boosted_budget(n_tot, kt, K, p, delta, opts));
      Rng trial = rng.derive("trial", rung * trials + t);
      Verdict v = Verdict::Far;
      try {
        BudgetScope scope(counter, budget);
        const GapDecision g = alg_main(x, y, kt, K, p, delta, trial, opts);
        merge(out, g);
        v = g.verdict;
      } catch (const BudgetExhausted& e) {
        if (e.owner() != &budget) throw;
        out.add("boosted.interrupts", 1);
      }
      out.add("boosted.trials", 1);
      if (v == Verdict::Close) ++close;
      // Stop once the rung's majority is settled either way.
      if (2 * close > trials) {
        out.verdict = Verdict::Close;
        out.add("boosted.close_rung", static_cast<double>(kt));
        break;
      }
      if (2 * (close + (trials - t - 1)) <= trials) break;
    }
  }
  out.queries = counter.queries();
  out.budget_spent = counter.units() - units0;
  return out;
}

std::size_t effective_delta(std::size_t n, std::size_t K, std::size_t delta, const Constants& c) {
  const double floor_v = c.delta_floor * lg(static_cast<double>(K));
  const double want = std::max(static_cast<double>(delta), floor_v * floor_v);
  const double cap = static_cast<double>(std::max<std::size_t>(n, 2));
  return static_cast<std::size_t>(std::max(2.0, std::min(want, cap)));
}

double gap_threshold(std::size_t n, std::size_t delta_eff, const Constants& c) {
  const double nd = static_cast<double>(std::max<std::size_t>(n, 2));
  const double d = static_cast<double>(std::max<std::size_t>(delta_eff, 2));
  return std::pow(lg(nd), c.gap_exponent * std::log(nd) / std::log(d));
}

GapDecision gap_ed(const QueriedString& x, const QueriedString& y, int k, std::size_t K, std::size_t delta, Rng& rng,
                   const SolverOptions& opts) {
  if (k < 0 || K < static_cast<std::size_t>(k)) throw std::invalid_argument("gap_ed: need 0 <= k <= K");
  if (delta < 2) throw std::invalid_argument("gap_ed: Delta must be at least 2");
  const Constants& c = opts.constants;
  const std::size_t n = std::max(x.size(), y.size());
  const std::size_t d_eff = effective_delta(n, K, delta, c);
  const double need = gap_threshold(n, d_eff, c);
  if (k > 0 && static_cast<double>(K) / static_cast<double>(k) < need) {
    throw GapRefused("gap K/k = " + std::to_string(static_cast<double>(K) / k) + " is below the required " +
                     std::to_string(need));
  }
  GapDecision out = alg_boosted(x, y, k, K, std::max<std::size_t>(x.size(), 1), d_eff, 1.0 / 3.0, rng, opts);
  out.seed = rng.seed();
  out.diagnostics["gap.delta_eff"] = static_cast<double>(d_eff);
  out.diagnostics["gap.threshold"] = need;
  return out;
}

PresetWiring preset_wiring(std::size_t n, int k, const Preset& preset, const Constants& c) {
  if (k < 1) throw std::invalid_argument("presets need k >= 1");
  const double kd = static_cast<double>(k);
  const double L = std::max(2.0, std::log2(kd));
  const double LL = std::max(1.0, std::log2(L));
  const double root = std::sqrt(L * LL);
  const bool small_k = std::pow(kd, 6.0) < static_cast<double>(n);
  PresetWiring w;
  switch (preset.kind) {
    case PresetKind::Subpoly:
      w.K = static_cast<std::size_t>(std::ceil(kd * std::pow(2.0, c.subpoly_mu * root)));
      w.delta = static_cast<std::size_t>(std::max(2.0, std::round(std::pow(2.0, root))));
      w.route = small_k ? "verifier" : "gap_ed";
      break;
    case PresetKind::Polylog: {
      if (!(preset.eps > 0.0 && preset.eps < 1.0)) throw std::invalid_argument("polylog preset needs 0 < eps < 1");
      const double dl = preset.eps / 2.0;
      w.K = static_cast<std::size_t>(std::ceil(kd * std::pow(L, c.polylog_gap / preset.eps)));
      w.delta = static_cast<std::size_t>(std::max(2.0, std::floor(std::pow(kd, dl / 3.0))));
      w.route = small_k ? "verifier" : "gap_ed";
      break;
    }
    case PresetKind::Poly: {
      if (preset.K < static_cast<std::size_t>(k)) throw std::invalid_argument("poly preset needs K >= k");
      const double ln = std::max(2.0, std::log2(static_cast<double>(std::max<std::size_t>(n, 2))));
      const double lln = std::max(1.0, std::log2(ln));
      const double Kd = static_cast<double>(preset.K);
      if (Kd < std::pow(2.0, std::pow(ln, 2.0 / 3.0))) {
        w.route = "landau_vishkin";
        w.K = preset.K;
        w.delta = 2;
        break;
      }
      const double r = std::sqrt(ln * lln);
      w.delta = static_cast<std::size_t>(std::max(2.0, std::round(std::pow(2.0, r))));
      const double bal = std::sqrt(static_cast<double>(n) / kd);
      const double kt = Kd < bal ? Kd : std::min(Kd, std::max(bal, kd * std::pow(2.0, c.poly_mu * r)));
      w.K = static_cast<std::size_t>(std::ceil(kt));
      w.route = "gap_ed";
      break;
    }
  }
  return w;
}

GapDecision gap_ed_preset(const QueriedString& x, const QueriedString& y, int k, const Preset& preset, Rng& rng,
                          const SolverOptions& opts) {
  const std::size_t n = std::max(x.size(), y.size());
  const PresetWiring w = preset_wiring(n, k, preset, opts.constants);
  GapDecision out;
  if (w.route == "verifier") {
    out = small_k_verifier(x, y, k, w.K, rng, opts);
  } else if (w.route == "landau_vishkin") {
    QueryCounter& counter = counter_of(x, y);
    const std::uint64_t units0 = counter.units();
    const Str xs = read_all(x);
    const Str ys = read_all(y);
    const auto d = ed_landau_vishkin(xs, ys, static_cast<std::size_t>(k));
    counter.charge(static_cast<std::uint64_t>(xs.size() + ys.size()) * static_cast<std::uint64_t>(k + 1));
    out.verdict = d ? Verdict::Close : Verdict::Far;
    out.seed = rng.seed();
    out.queries = counter.queries();
    out.budget_spent = counter.units() - units0;
  } else {
    out = gap_ed(x, y, k, w.K, w.delta, rng, opts);
  }
  out.diagnostics["preset.K"] = static_cast<double>(w.K);
  out.diagnostics["preset.delta"] = static_cast<double>(w.delta);
  return out;
}

GapDecision small_k_verifier(const QueriedString& x, const QueriedString& y, int k, std::size_t K, Rng& rng,
                             const SolverOptions& opts) {
  if (k < 0) throw std::invalid_argument("small_k_verifier: k must be non-negative");
  QueryCounter& counter = counter_of(x, y);
  const std::uint64_t units0 = counter.units();
  GapDecision out;
  out.seed = rng.seed();
  auto finish = [&](Verdict v) {
    out.verdict = v;
    out.queries = counter.queries();
    out.budget_spent = counter.units() - units0;
    return out;
  };
  const std::size_t ku = static_cast<std::size_t>(k);
  const std::size_t diff = x.size() > y.size() ? x.size() - y.size() : y.size() - x.size();
  if (diff > K) return finish(Verdict::Far);

  const std::size_t b = std::max<std::size_t>(8, 4 * ku);
  const std::size_t blocks = x.size() / b;
  if (blocks == 0) {
    const Str xs = read_all(x);
    const Str ys = read_all(y);
    return finish(ed_landau_vishkin(xs, ys, ku) ? Verdict::Close : Verdict::Far);
  }
  const double want = std::ceil(opts.constants.verifier_samples * static_cast<double>(x.size()) /
                                (static_cast<double>(std::max<std::size_t>(ku, 1)) * static_cast<double>(b + 2 * ku)));
  const bool all = !(want < static_cast<double>(blocks));
  const std::size_t m = all ? blocks : static_cast<std::size_t>(want);
  const long long ny = static_cast<long long>(y.size());
  for (std::size_t t = 0; t < m; ++t) {
    const std::size_t j = all ? t : static_cast<std::size_t>(rng.below(blocks));
    const long long start = static_cast<long long>(j * b);
    const Str xs = x.slice(start, start + static_cast<long long>(b)).materialize();
    const long long lo = std::max(0LL, start - k);
    const Str yw = y.slice(lo, start + static_cast<long long>(b) + k).materialize();
    bool good = false;
    for (int s = -k; s <= k && !good; ++s) {
      const long long a = std::clamp(start + s, lo, lo + static_cast<long long>(yw.size()));
      const long long e = std::clamp(std::min(start + static_cast<long long>(b) + s, ny), a,
                                     lo + static_cast<long long>(yw.size()));
      const Span w = Span(yw).subspan(static_cast<std::size_t>(a - lo), static_cast<std::size_t>(e - a));
      good = ed_landau_vishkin(xs, w, 2 * ku).has_value();
      counter.charge(static_cast<std::uint64_t>(b) * (2 * ku + 1));
    }
    out.add("verifier.blocks", 1);
    if (!good) {
      out.add("verifier.bad", 1);
      return finish(Verdict::Far);
    }
  }
  return finish(Verdict::Close);
}

}  // namespace gaped
