#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gaped/property_testers.hpp"

namespace gaped {

struct GapDecision {
  Verdict verdict = Verdict::Close;
  std::uint64_t queries = 0;       // final tally of the shared counter
  std::uint64_t budget_spent = 0;  // units charged during this call
  std::uint64_t seed = 0;
  std::map<std::string, double> diagnostics;

  void add(const std::string& key, double v) { diagnostics[key] += v; }
};

}  // namespace gaped
