#pragma once

#include <cstddef>
#include <cstdint>

#include "gaped/config.hpp"
#include "gaped/decision.hpp"
#include "gaped/partition_tree.hpp"
#include "gaped/rng.hpp"
#include "gaped/string_access.hpp"

namespace gaped {

// B_s = min_{s'} (A_{s'} + 2|s - s'|) by one sweep in each direction.
ShiftTable range_min_plus(const ShiftTable& a);

// ell = ceil((log n)^(c log_Delta n)), clamped to [2, min(n, arity_max)].
std::size_t choose_arity(std::size_t n, std::size_t delta, const Constants& c);

// Tree with alpha_root = factor * gamma, alpha decaying by (1 - 1/(2 log n))
// per level and r_root = numerator * gamma^2 / K.
PartitionTree build_tree(std::size_t n, std::size_t arity, std::size_t K, double gamma,
                         const Constants& c = Constants::published());

struct TreeStats {
  std::uint64_t active = 0;
  std::uint64_t pruned = 0;
  std::uint64_t leaves = 0;
  std::uint64_t matching_tests = 0;
  std::uint64_t periodicity_tests = 0;
  std::uint64_t unmatched_active = 0;  // debug-oracle mode only
};

struct TreeSolveParams {
  int k = 0;
  std::size_t p = 1;      // periodicity bound handed to the periodicity test
  std::size_t delta = 2;  // Delta of the periodic shortcut
  double mu = 1.0;        // additive slack in recover: beta = mu / r_v
};

struct TreeSolveResult {
  ShiftTable root;
  TreeStats stats;
};

// Runs the recursive tree-distance estimator from the root of `tree` and
// returns eta_{root, s} for s in [-k, k]. Budget exhaustion propagates.
TreeSolveResult solve_tree(const QueriedString& x, const QueriedString& y, const PartitionTree& tree,
                           const TreeSolveParams& params, Rng& rng, const SolverOptions& opts = {});

// GapED(k, K) for inputs with BP_p(X) <= B. Runs solve_tree under ten times
// the running-time bound; exhaustion yields Far.
GapDecision alg_small_bp(const QueriedString& x, const QueriedString& y, int k, std::size_t K, std::size_t p,
                         std::size_t B, std::size_t delta, Rng& rng, const SolverOptions& opts = {});

// The operation-unit budget used by alg_small_bp.
double small_bp_budget(std::size_t n, std::size_t K, std::size_t p, std::size_t B, std::size_t delta,
                       const SolverOptions& opts);

}  // namespace gaped
