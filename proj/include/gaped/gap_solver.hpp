#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaped/config.hpp"
#include "gaped/decision.hpp"
#include "gaped/rng.hpp"
#include "gaped/string_access.hpp"

namespace gaped {

struct SplitResult {
  std::vector<std::size_t> cuts_x;  // 0 = cuts_x.front() < ... < cuts_x.back() = |X|
  std::vector<std::size_t> cuts_y;
  std::size_t sampled_breaks = 0;
  std::size_t pieces() const { return cuts_x.size() - 1; }
};

// Cuts X at sampled k-breaks and Y at the unique nearby exact occurrence of
// the break window (or at the same index when none exists). k = 1 uses
// 2-breaks since a break needs k >= 2.
SplitResult split(const QueriedString& x, const QueriedString& y, int k, std::size_t K, double delta, Rng& rng);

struct LadderOutcome {
  Verdict verdict = Verdict::Close;
  std::size_t stopped_at = 0;  // d at which Far was declared, 0 when Close
  std::size_t subcalls = 0;
};

// d = 1, 2, 4, ..., K: each piece joins with probability
// min(1, 108 d log K ln(1/delta') / K), delta' = 0.01 / log K, and Far is
// returned once 12 ln(1/delta') answers are Far. solve(piece, d) answers
// the GapED subproblem of that piece at level d.
LadderOutcome precision_ladder(std::size_t pieces, std::size_t K, const Constants& c, Rng& rng,
                               const std::function<Verdict(std::size_t, std::size_t)>& solve);

// Recursive period for a piece of total length n_piece.
std::size_t descent_period(int k, std::size_t K, std::size_t n_piece, const Constants& c);

// Throws std::logic_error unless p_child <= p / sqrt(Delta).
void check_descent(std::size_t p, std::size_t p_child, std::size_t delta);

GapDecision alg_main(const QueriedString& x, const QueriedString& y, int k, std::size_t K, std::size_t p,
                     std::size_t delta, Rng& rng, const SolverOptions& opts = {});

// Doubling ladder k~ = 0, 1, 2, 4, ..., k with repeated budgeted alg_main
// trials per rung; a rung whose majority is Close returns Close.
GapDecision alg_boosted(const QueriedString& x, const QueriedString& y, int k, std::size_t K, std::size_t p,
                        std::size_t delta, double fail_prob, Rng& rng, const SolverOptions& opts = {});

std::size_t boosted_trials(int k, double fail_prob, const Constants& c);
std::vector<int> rung_ladder(int k);
std::vector<std::size_t> level_ladder(std::size_t K);

// Per-trial operation budget of alg_boosted at rung k~.
double boosted_budget(std::size_t n_total, int k_rung, std::size_t K, std::size_t p, std::size_t delta,
                      const SolverOptions& opts);

class GapRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Delta' = max(Delta, (256 log K)^2), clamped to n so the tree stays defined.
std::size_t effective_delta(std::size_t n, std::size_t K, std::size_t delta, const Constants& c);

// Smallest K/k accepted by gap_ed: (log n)^(c log_Delta' n).
double gap_threshold(std::size_t n, std::size_t delta_eff, const Constants& c);

// Top-level entry: alg_boosted on (X, Y, k, K, p = n, Delta') with failure
// probability 1/3. Throws GapRefused when K/k is below gap_threshold.
GapDecision gap_ed(const QueriedString& x, const QueriedString& y, int k, std::size_t K, std::size_t delta,
                   Rng& rng, const SolverOptions& opts = {});

enum class PresetKind { Subpoly, Polylog, Poly };

struct Preset {
  PresetKind kind = PresetKind::Subpoly;
  double eps = 0.5;     // polylog
  std::size_t K = 0;    // poly
};

struct PresetWiring {
  std::string route;    // "gap_ed", "verifier" or "landau_vishkin"
  std::size_t K = 0;
  std::size_t delta = 2;
};

PresetWiring preset_wiring(std::size_t n, int k, const Preset& preset, const Constants& c);

GapDecision gap_ed_preset(const QueriedString& x, const QueriedString& y, int k, const Preset& preset, Rng& rng,
                          const SolverOptions& opts = {});

// Block verifier used when k^6 < n. Blocks of length b = max(8, 4k) are
// sampled; a block is bad when every shift |s| <= k leaves it more than 2k
// edits from the aligned window. ED <= k never produces a bad block, so
// Close is certain in that case; Far is reported as soon as a bad block is
// seen.
GapDecision small_k_verifier(const QueriedString& x, const QueriedString& y, int k, std::size_t K, Rng& rng,
                             const SolverOptions& opts = {});

}  // namespace gaped
