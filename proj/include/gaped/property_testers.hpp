#pragma once

#include <cmath>
#include <cstddef>
#include <optional>

#include "gaped/rng.hpp"
#include "gaped/string_access.hpp"

namespace gaped {

enum class Verdict { Close, Far };

const char* to_string(Verdict v);

struct TesterVerdict {
  Verdict kind = Verdict::Close;
  std::optional<int> shift;              // matching test
  std::optional<Str> period;             // periodicity test
  std::optional<std::size_t> mismatch;   // offset in X of an observed mismatch
  std::size_t samples = 0;
};

// Samples ceil(r |X| ln(1/delta)) uniform positions; when that is at least
// |X| the strings are compared in full instead. Far always carries a
// mismatch witness.
TesterVerdict equality_test(const Fragment& x, const Fragment& y, double r, double delta, Rng& rng,
                            bool exhaustive = false);

// Requires |Y| = |X| + 2k. Close[s] carries a shift whose window
// Y[k+s, |X|+k+s) passed an equality test; Far means every shift in [-k, k]
// was eliminated by an observed mismatch.
TesterVerdict matching_test(const Fragment& x, const Fragment& y, int k, double r, double delta, Rng& rng,
                            bool exhaustive = false);

// Same test against the virtual window of y starting at y_start (which may
// reach outside y). Shifts whose window leaves y are not eligible.
TesterVerdict matching_test_at(const Fragment& x, const QueriedString& y, long long y_start, int k, double r,
                               double delta, Rng& rng, bool exhaustive = false);

// Close[Q] with Q primitive, |Q| <= p, taken from a prefix of X; Far means
// X is not p-periodic.
TesterVerdict periodicity_test(const Fragment& x, std::size_t p, double r, double delta, Rng& rng,
                               bool exhaustive = false);

std::size_t equality_sample_count(std::size_t n, double r, double delta);

}  // namespace gaped
