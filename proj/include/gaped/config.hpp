#pragma once

#include <cstddef>

namespace gaped {

// Every frozen constant of the solver in one record. published() holds the
// published values; calibrated() differs only where desk-scale inputs cannot
// satisfy the published separation (see README).
struct Constants {
  // Bounded block periodicity solver.
  double gamma = 3.0;                 // realised factor of the periodic shortcut
  double alpha_root_factor = 10.0;    // alpha_root = factor * gamma
  double rate_numerator = 10000.0;    // r_root = numerator * gamma^2 / K
  double far_threshold = 0.099;       // Far iff eta_root,0 >= threshold * K / gamma
  double tester_rate_factor = 3.0;    // testers run at rate 3 r_v
  double tester_delta = 0.01;         // ... with delta = 0.01 / n
  double precision_delta = 0.01;      // precisions use delta = 0.01 / (k n)
  double precision_truncation = 200;  // truncation event at 1 / (200 n)
  double arity_exponent = 1.0;        // ell = ceil((log n)^(c log_Delta n))
  std::size_t arity_max = 64;
  double small_bp_budget_factor = 10.0;
  double small_bp_time_exponent = 1.0;  // alpha in (log n)^(alpha log_Delta n)

  // Split and the main recursion.
  double split_delta = 0.01;
  double piece_rate = 108.0;          // 108 d log K log(1/delta') / K
  double piece_delta = 0.01;          // delta' = 0.01 / log K
  double far_count = 12.0;            // Far once 12 log(1/delta') answers are Far
  double sub_gap = 64.0;              // recursive k = d (k / K) 64 log K
  double sub_period = 16.0;           // recursive p = min(n', 16 k log K)
  double boosted_delta = 0.01;        // recursive delta = 0.01 / n^2
  double equality_delta = 0.001;
  double trials_factor = 8.0;         // ceil(8 ln(max(2, log2 max(2, k)) / delta))
  double boosted_time_exponent = 1.0; // alpha in the per-trial budget
  double boosted_budget_factor = 10.0;
  double delta_floor = 256.0;         // Delta' = max(Delta, (256 log K)^2)
  double gap_exponent = 1.0;          // refuse unless K/k >= (log n)^(c log_Delta' n)

  // Preset wiring.
  double subpoly_mu = 2.5;            // K = k 2^(mu sqrt(log k log log k))
  double polylog_gap = 2.0;           // K = k (log k)^(gap / eps)
  double poly_mu = 1.0;               // K~ = max(sqrt(n/k), k 2^(mu sqrt(log n log log n)))
  double verifier_samples = 4.0;      // sampled blocks ~ factor n / (k (b + 2k))

  static Constants published() { return Constants{}; }
  static Constants calibrated() {
    Constants c;
    c.alpha_root_factor = 1.0;
    c.far_threshold = 0.99;
    return c;
  }
};

struct SolverOptions {
  Constants constants = Constants::published();
  bool debug_oracle = false;
  // Forces u = 1, plain summation and exhaustive testers, and disables the
  // periodic shortcut, which collapses the tree solver onto the exact tree
  // distance.
  bool degenerate = false;
  double budget_multiplier = 1.0;
};

}  // namespace gaped
