#pragma once

#include <cstddef>
#include <vector>

#include "gaped/exact_core.hpp"
#include "gaped/rng.hpp"
#include "gaped/string_access.hpp"

namespace gaped {

// True iff i is a k-break: per(X[i, i+3k)) > k. Reads exactly the window.
bool is_break(const Fragment& x, std::size_t i, std::size_t k);

std::size_t count_breaks_exact(Span x, std::size_t k);
std::vector<std::size_t> breaks_exact(Span x, std::size_t k);

// Each multiple of k in [0, n-3k] is tested with probability
// min(1, ln(n/delta)/K); the breaks among them are returned in order.
std::vector<std::size_t> sample_breaks(const Fragment& x, std::size_t k, std::size_t K, double delta,
                                       Rng& rng);

double break_sampling_rate(std::size_t n, std::size_t K, double delta);

}  // namespace gaped
