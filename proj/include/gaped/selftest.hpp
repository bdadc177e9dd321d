#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gaped {

struct SelfTestResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

// Small exhaustive and randomized suites comparing the fast routines with
// brute-force oracles. Deterministic for a given seed.
std::vector<SelfTestResult> run_selftests(unsigned long long seed);

}  // namespace gaped
