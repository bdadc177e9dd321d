#include "gaped/precision_sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gaped {

double precision_scale(double eps, double delta) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("precision: eps must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("precision: delta must lie in (0, 1)");
  return eps * eps / (64.0 * std::log(1.0 / delta));
}

Precision sample_precision(double eps, double delta, Rng& rng, double truncation_n) {
  const double c = precision_scale(eps, delta);
  const double floor_v = truncation_n > 1.0 ? 1.0 / truncation_n : 0.0;
  double v = rng.unit();
  while (v < floor_v) v = rng.unit();
  return Precision{c * v};
}

double recover(std::span<const double> estimates, std::span<const Precision> precisions, double eps,
               double delta, double alpha, double beta) {
  if (estimates.size() != precisions.size() || estimates.empty()) {
    throw std::invalid_argument("recover: need equally many estimates and precisions");
  }
  if (alpha < 1.0 || beta < 0.0) throw std::invalid_argument("recover: need alpha >= 1 and beta >= 0");
  const double c = precision_scale(eps, delta);
  const double threshold = 4.0 * beta / eps;
  const double floor_value = c * threshold;
  double sum = 0.0;
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    const double a = std::max(0.0, estimates[i]);
    if (a >= threshold * precisions[i].u) sum += std::max(a, floor_value);
  }
  return sum;
}

}  // namespace gaped
