#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaped/config.hpp"
#include "gaped/decision.hpp"
#include "gaped/gap_solver.hpp"
#include "gaped/rng.hpp"
#include "gaped/string_access.hpp"

namespace gaped {

enum class InstanceKind { PlantedEdits, IndependentRandom, Periodic, BlockPeriodic, FromFiles };

struct InstanceSpec {
  InstanceKind kind = InstanceKind::PlantedEdits;
  std::size_t n = 1024;
  std::size_t alphabet = 4;
  std::uint64_t seed = 1;
  std::size_t k_true = 0;       // planted_edits: edits applied to X to get Y
  std::size_t period = 2;       // periodic
  double corruption = 0.0;      // periodic: edits applied = round(corruption * n)
  std::size_t p = 4;            // block_periodic
  std::size_t target_bp = 1;    // block_periodic
  std::string path_x, path_y;   // from_files
};

// Exact edit distance when computable (n <= 4096), otherwise a planted upper bound.
struct Certificate {
  enum class Kind { None, Exact, UpperBound } kind = Kind::None;
  std::size_t value = 0;
};

struct Instance {
  Str x, y;
  Certificate cert;
};

inline constexpr std::size_t kCertificateLimit = 4096;

Instance generate(const InstanceSpec& spec);

// Applies exactly `edits` uniformly chosen substitutions, insertions or deletions.
Str apply_random_edits(const Str& x, std::size_t edits, std::size_t alphabet, Rng& rng);
Str random_string(std::size_t n, std::size_t alphabet, Rng& rng);
Str read_file_bytes(const std::string& path);

struct RunReport {
  static constexpr int kSchemaVersion = 1;
  std::string command;
  std::string verdict;
  std::uint64_t queries = 0;
  std::uint64_t budget_spent = 0;
  std::int64_t wall_nanos = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> params;
  std::string preset;
  Certificate cert;
  std::map<std::string, double> counters;

  std::string to_json() const;
  std::string to_text() const;
  std::string csv_header() const;
  std::string csv_row() const;
  static RunReport from_json(const std::string& line);
};

RunReport make_report(const std::string& command, const GapDecision& d, std::int64_t wall_nanos);

struct BenchRow {
  std::size_t n = 0;
  int k = 0;
  std::size_t K = 0;
  double queries_p50 = 0, queries_p90 = 0, budget_p50 = 0;
};

// Median query counts of the preset solver over `trials` planted Close
// instances (k planted edits, alphabet 256) per n. Trials run in parallel.
std::vector<BenchRow> bench_queries(int k, const std::vector<std::size_t>& n_list, std::size_t trials,
                                    std::uint64_t seed, const Preset& preset, const SolverOptions& opts);

// Nearest-rank quantile of a non-empty sample.
double quantile(std::vector<double> v, double q);

}  // namespace gaped
