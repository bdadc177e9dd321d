#pragma once

#include <span>

#include "gaped/rng.hpp"

namespace gaped {

struct Precision {
  double u = 1.0;
};

// u = c * v with v uniform on (0, 1] and c = eps^2 / (64 ln(1/delta)), so 1/u
// is Pareto-tailed. With truncation_n > 0, draws with v < 1/truncation_n are
// rejected; that rejection is the conditioning event of the efficiency bound.
Precision sample_precision(double eps, double delta, Rng& rng, double truncation_n = 0.0);

double precision_scale(double eps, double delta);

// Threshold estimator over the scaled values a_i / u_i. With T = 4 beta / eps,
// item i contributes max(a_i, c T) when a_i >= T u_i and nothing otherwise.
// Monotone in every estimate; with beta = 0 it is the plain sum of the
// non-negative parts.
double recover(std::span<const double> estimates, std::span<const Precision> precisions, double eps,
               double delta, double alpha, double beta);

}  // namespace gaped
