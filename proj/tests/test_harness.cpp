#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>

#include "gaped/exact_core.hpp"
#include "gaped/harness.hpp"
#include "gaped/trials.hpp"

namespace gaped {
namespace {

TEST(Generate, PlantedZeroIsIdentity) {
  InstanceSpec spec;
  spec.kind = InstanceKind::PlantedEdits;
  spec.n = 300;
  spec.k_true = 0;
  const Instance inst = generate(spec);
  EXPECT_EQ(inst.x, inst.y);
  EXPECT_EQ(inst.cert.kind, Certificate::Kind::Exact);
  EXPECT_EQ(inst.cert.value, 0u);
}

TEST(Generate, PlantedEditsBoundTheDistance) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    InstanceSpec spec;
    spec.n = 200;
    spec.k_true = 7;
    spec.seed = seed;
    const Instance inst = generate(spec);
    EXPECT_LE(inst.cert.value, 7u);
    EXPECT_EQ(inst.cert.value, ed_dp(inst.x, inst.y));
  }
  InstanceSpec big;
  big.n = 10000;
  big.k_true = 5;
  EXPECT_EQ(generate(big).cert.kind, Certificate::Kind::UpperBound);
}

TEST(Generate, PeriodicHasThePeriod) {
  InstanceSpec spec;
  spec.kind = InstanceKind::Periodic;
  spec.n = 100;
  spec.period = 2;
  spec.corruption = 0.0;
  const Instance inst = generate(spec);
  EXPECT_LE(period(inst.x), 2u);
  EXPECT_EQ(inst.x, inst.y);
}

TEST(Generate, BlockPeriodicRespectsTarget) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    InstanceSpec spec;
    spec.kind = InstanceKind::BlockPeriodic;
    spec.n = 200;
    spec.p = 4;
    spec.target_bp = 5;
    spec.seed = seed;
    const Instance inst = generate(spec);
    EXPECT_EQ(inst.x.size(), 200u);
    EXPECT_LE(bp_exact(inst.x, 4), 5u);
  }
}

TEST(Generate, DeterministicPerSeed) {
  InstanceSpec spec;
  spec.kind = InstanceKind::IndependentRandom;
  spec.n = 500;
  spec.seed = 9;
  EXPECT_EQ(generate(spec).y, generate(spec).y);
  spec.seed = 10;
  const auto other = generate(spec);
  spec.seed = 9;
  EXPECT_NE(generate(spec).y, other.y);
}

TEST(Generate, RejectsInconsistentSpecs) {
  InstanceSpec spec;
  spec.alphabet = 1;
  EXPECT_THROW(generate(spec), std::invalid_argument);
  spec.alphabet = 4;
  spec.kind = InstanceKind::Periodic;
  spec.period = 0;
  EXPECT_THROW(generate(spec), std::invalid_argument);
}

TEST(Generate, FromFilesReadsRawBytes) {
  const std::string px = ::testing::TempDir() + "gaped_x.bin";
  const std::string py = ::testing::TempDir() + "gaped_y.bin";
  std::ofstream(px, std::ios::binary) << std::string("ab\0c", 4);
  std::ofstream(py, std::ios::binary) << "abc";
  InstanceSpec spec;
  spec.kind = InstanceKind::FromFiles;
  spec.path_x = px;
  spec.path_y = py;
  const Instance inst = generate(spec);
  EXPECT_EQ(inst.x.size(), 4u);
  EXPECT_EQ(inst.cert.value, 1u);
  std::remove(px.c_str());
  std::remove(py.c_str());
}

RunReport sample_report() {
  RunReport r;
  r.command = "gap-ed";
  r.verdict = "Far";
  r.queries = 12345;
  r.budget_spent = 99999;
  r.wall_nanos = 42;
  r.seed = 7;
  r.params = {{"k", 8}, {"K", 4096}, {"delta", 3}};
  r.preset = "subpoly";
  r.cert = {Certificate::Kind::UpperBound, 8};
  r.counters = {{"split.pieces", 11}, {"tree.active", 0.5}};
  return r;
}

TEST(RunReport, JsonRoundTripIsLossless) {
  const RunReport r = sample_report();
  const std::string line = r.to_json();
  EXPECT_EQ(line.find('\n'), std::string::npos);
  const RunReport back = RunReport::from_json(line);
  EXPECT_EQ(back.to_json(), line);
  EXPECT_EQ(back.params, r.params);
  EXPECT_EQ(back.counters, r.counters);
  EXPECT_EQ(back.cert.value, 8u);
}

TEST(RunReport, RejectsOtherSchemaVersions) {
  std::string line = sample_report().to_json();
  const auto at = line.find("\"schema_version\":1");
  ASSERT_NE(at, std::string::npos);
  line.replace(at, 18, "\"schema_version\":2");
  EXPECT_THROW(RunReport::from_json(line), std::runtime_error);
}

TEST(RunReport, CsvHeaderMatchesRow) {
  const RunReport r = sample_report();
  const auto commas = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
  EXPECT_EQ(commas(r.csv_header()), commas(r.csv_row()));
  EXPECT_NE(r.to_text().find("Far"), std::string::npos);
}

TEST(Quantile, NearestRank) {
  EXPECT_EQ(quantile({5, 1, 3}, 0.5), 3.0);
  EXPECT_EQ(quantile({4, 1, 3, 2}, 0.5), 2.0);
  EXPECT_EQ(quantile({4, 1, 3, 2}, 0.9), 4.0);
  EXPECT_THROW(quantile({}, 0.5), std::invalid_argument);
}

TEST(Trials, SerialAndParallelAgree) {
  const auto body = [](std::size_t i) {
    InstanceSpec spec;
    spec.n = 4096;
    spec.alphabet = 256;
    spec.k_true = 2;
    spec.seed = 100 + i;
    const Instance inst = generate(spec);
    auto c = std::make_shared<QueryCounter>();
    const QueriedString x(inst.x, c, 'X');
    const QueriedString y(inst.y, c, 'Y');
    Rng rng(i);
    const GapDecision d = gap_ed(x, y, 1, 400, 2, rng);
    TrialOutcome o;
    o.verdict = d.verdict;
    o.queries = d.queries;
    o.budget_spent = d.budget_spent;
    return o;
  };
  const auto a = run_trials_serial(6, body);
  const auto b = run_trials_parallel(6, body);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].verdict, b[i].verdict);
    EXPECT_EQ(a[i].queries, b[i].queries);
    EXPECT_EQ(a[i].budget_spent, b[i].budget_spent);
  }
  EXPECT_GE(trial_threads(), 1);
}

TEST(Trials, ParallelRunnerRethrows) {
  EXPECT_THROW(run_trials_parallel(4,
                                   [](std::size_t i) -> TrialOutcome {
                                     if (i == 2) throw std::runtime_error("boom");
                                     return {};
                                   }),
               std::runtime_error);
}

TEST(Bench, LargeKHitsTheLengthBaseCase) {
  SolverOptions opts;
  const auto rows = bench_queries(1024, {512}, 3, 1, Preset{PresetKind::Poly, 0.5, 1u << 20}, opts);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].queries_p50, 0.0);
}

TEST(Bench, RowsCarryTheWiredGap) {
  SolverOptions opts;
  opts.constants = Constants::calibrated();
  const auto rows = bench_queries(2, {4096}, 3, 5, Preset{PresetKind::Subpoly}, opts);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].K, preset_wiring(4096, 2, Preset{PresetKind::Subpoly}, opts.constants).K);
  EXPECT_GT(rows[0].queries_p50, 0.0);
  EXPECT_LE(rows[0].queries_p50, rows[0].queries_p90);
}

}  // namespace
}  // namespace gaped
