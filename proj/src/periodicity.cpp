#include "gaped/periodicity.hpp"

#include <cmath>
#include <stdexcept>

namespace gaped {

bool is_break(const Fragment& x, std::size_t i, std::size_t k) {
  if (k < 2) throw std::invalid_argument("is_break: k must be at least 2");
  if (i % k != 0) throw std::invalid_argument("is_break: i must be a multiple of k");
  if (x.size() < 3 * k || i > x.size() - 3 * k) throw std::invalid_argument("is_break: window out of range");
  const Str w = x.slice(static_cast<long long>(i), static_cast<long long>(i + 3 * k)).materialize();
  return period(w) > k;
}

std::vector<std::size_t> breaks_exact(Span x, std::size_t k) {
  if (k < 2) throw std::invalid_argument("breaks: k must be at least 2");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 3 * k <= x.size(); i += k) {
    if (period(x.subspan(i, 3 * k)) > k) out.push_back(i);
  }
  return out;
}

std::size_t count_breaks_exact(Span x, std::size_t k) { return breaks_exact(x, k).size(); }

double break_sampling_rate(std::size_t n, std::size_t K, double delta) {
  if (n == 0) return 0.0;
  return std::min(1.0, std::log(static_cast<double>(n) / delta) / static_cast<double>(K));
}

std::vector<std::size_t> sample_breaks(const Fragment& x, std::size_t k, std::size_t K, double delta,
                                       Rng& rng) {
  if (k < 2 || K < k) throw std::invalid_argument("sample_breaks: need 2 <= k <= K");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("sample_breaks: delta out of range");
  std::vector<std::size_t> out;
  const std::size_t n = x.size();
  if (n < 3 * k) return out;
  const double rate = break_sampling_rate(n, K, delta);
  for (std::size_t i = 0; i + 3 * k <= n; i += k) {
    if (rng.bernoulli(rate) && is_break(x, i, k)) out.push_back(i);
  }
  return out;
}

}  // namespace gaped
