#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "gaped/property_testers.hpp"

namespace gaped {

struct TrialOutcome {
  Verdict verdict = Verdict::Close;
  std::uint64_t queries = 0;
  std::uint64_t budget_spent = 0;
  std::int64_t wall_nanos = 0;
};

// Runs body(0..count-1). Every trial must own its strings, counter and RNG;
// results land at their index, so both runners return identical vectors.
std::vector<TrialOutcome> run_trials_serial(std::size_t count, const std::function<TrialOutcome(std::size_t)>& body);
std::vector<TrialOutcome> run_trials_parallel(std::size_t count,
                                              const std::function<TrialOutcome(std::size_t)>& body);

// Worker threads the parallel runner will use (1 without OpenMP).
int trial_threads();

}  // namespace gaped
