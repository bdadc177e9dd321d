#include "gaped/trials.hpp"

#include <chrono>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gaped {

namespace {

TrialOutcome timed(const std::function<TrialOutcome(std::size_t)>& body, std::size_t i) {
  const auto t0 = std::chrono::steady_clock::now();
  TrialOutcome o = body(i);
  o.wall_nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

}  // namespace

std::vector<TrialOutcome> run_trials_serial(std::size_t count, const std::function<TrialOutcome(std::size_t)>& body) {
  std::vector<TrialOutcome> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = timed(body, i);
  return out;
}

std::vector<TrialOutcome> run_trials_parallel(std::size_t count,
                                              const std::function<TrialOutcome(std::size_t)>& body) {
  std::vector<TrialOutcome> out(count);
  std::exception_ptr failure;
  const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = timed(body, static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(gaped_trial_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

int trial_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace gaped
