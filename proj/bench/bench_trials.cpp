// Serial versus OpenMP trial runner on the same batch of gap_ed solves.

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "gaped/harness.hpp"
#include "gaped/trials.hpp"

namespace {

using namespace gaped;

struct Batch {
  std::vector<Instance> instances;
  SolverOptions opts;
};

const Batch& batch() {
  static const Batch b = [] {
    Batch out;
    out.opts.constants = Constants::calibrated();
    for (std::uint64_t i = 0; i < 16; ++i) {
      InstanceSpec spec;
      spec.n = 4096;
      spec.alphabet = 256;
      spec.k_true = 2;
      spec.seed = 300 + i;
      out.instances.push_back(generate(spec));
    }
    return out;
  }();
  return b;
}

TrialOutcome solve(std::size_t i) {
  const Batch& b = batch();
  const Instance& inst = b.instances[i % b.instances.size()];
  auto counter = std::make_shared<QueryCounter>();
  const QueriedString x(inst.x, counter, 'X');
  const QueriedString y(inst.y, counter, 'Y');
  Rng rng(i);
  const GapDecision d = gap_ed(x, y, 2, 6000, 2, rng, b.opts);
  TrialOutcome o;
  o.verdict = d.verdict;
  o.queries = d.queries;
  o.budget_spent = d.budget_spent;
  return o;
}

void BM_TrialsSerial(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_trials_serial(count, solve));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TrialsParallel(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_trials_parallel(count, solve));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = trial_threads();
}

BENCHMARK(BM_TrialsSerial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TrialsParallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
