#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaped/exact_core.hpp"
#include "gaped/gap_solver.hpp"
#include "gaped/harness.hpp"
#include "gaped/periodicity.hpp"
#include "gaped/selftest.hpp"

using namespace gaped;

namespace {

struct Common {
  std::uint64_t seed = 1;
  double budget_multiplier = 1.0;
  std::string format = "json";
  std::string profile = "published";
  bool debug_oracle = false;

  SolverOptions options() const {
    SolverOptions o;
    o.constants = profile == "calibrated" ? Constants::calibrated() : Constants::published();
    o.debug_oracle = debug_oracle;
    o.budget_multiplier = budget_multiplier;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Root seed (default: $GAPED_SEED or 1)");
  cmd->add_option("--budget-multiplier", c.budget_multiplier, "Scales every operation budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--profile", c.profile, "Constant profile")->check(CLI::IsMember({"published", "calibrated"}));
  cmd->add_flag("--debug-oracle", c.debug_oracle, "Record uncharged ground-truth diagnostics");
}

void emit(const RunReport& r, const std::string& format) {
  if (format == "json") {
    std::cout << r.to_json() << "\n";
  } else if (format == "csv") {
    std::cout << r.csv_header() << "\n" << r.csv_row() << "\n";
  } else {
    std::cout << r.to_text();
  }
}

Certificate certify(const Str& x, const Str& y) {
  if (std::max(x.size(), y.size()) > kCertificateLimit) return {};
  return {Certificate::Kind::Exact, ed_dp(x, y)};
}

std::optional<Preset> parse_preset(const std::string& name, double eps, std::size_t K) {
  if (name.empty()) return std::nullopt;
  if (name == "subpoly") return Preset{PresetKind::Subpoly, eps, K};
  if (name == "polylog") return Preset{PresetKind::Polylog, eps, K};
  return Preset{PresetKind::Poly, eps, K};
}

std::int64_t since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sublinear gap edit distance"};
  app.require_subcommand(1);

  Common common;
  if (const char* env = std::getenv("GAPED_SEED")) {
    try {
      common.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "GAPED_SEED is not an unsigned integer\n";
      return 1;
    }
  }

  int k = -1;
  std::size_t K = 0, delta = 2, p = 0, trials = 9;
  double eps = 0.5;
  std::string preset_name;
  std::string file_x, file_y;
  std::vector<std::size_t> n_list;

  auto* gap = app.add_subcommand("gap-ed", "Decide Close (ED <= k) versus Far (ED > K)");
  gap->add_option("fileX", file_x)->required()->check(CLI::ExistingFile);
  gap->add_option("fileY", file_y)->required()->check(CLI::ExistingFile);
  gap->add_option("--k", k, "Close threshold")->required()->check(CLI::NonNegativeNumber);
  gap->add_option("--K", K, "Far threshold (ignored with subpoly/polylog presets)");
  gap->add_option("--delta", delta, "Delta, the recursion fan-out parameter")->check(CLI::Range(2, 1 << 30));
  gap->add_option("--preset", preset_name, "Parameter preset")
      ->check(CLI::IsMember({"subpoly", "polylog", "poly"}));
  gap->add_option("--eps", eps, "Polylog preset exponent")->check(CLI::Range(0.0, 1.0));
  add_common(gap, common);

  auto* exact = app.add_subcommand("exact-ed", "Exact edit distance (Landau-Vishkin with doubling)");
  exact->add_option("fileX", file_x)->required()->check(CLI::ExistingFile);
  exact->add_option("fileY", file_y)->required()->check(CLI::ExistingFile);
  add_common(exact, common);

  auto* bp = app.add_subcommand("bp-estimate", "Block periodicity via k-breaks");
  bp->add_option("fileX", file_x)->required()->check(CLI::ExistingFile);
  bp->add_option("--p", p, "Period bound (>= 2)")->required()->check(CLI::Range(2, 1 << 30));
  bp->add_option("--K", K, "Sampling divisor; 0 samples every position");
  add_common(bp, common);

  auto* per = app.add_subcommand("period", "Smallest period of a file");
  per->add_option("fileX", file_x)->required()->check(CLI::ExistingFile);
  add_common(per, common);

  auto* spl = app.add_subcommand("split", "Cut X and Y at sampled k-breaks");
  spl->add_option("fileX", file_x)->required()->check(CLI::ExistingFile);
  spl->add_option("fileY", file_y)->required()->check(CLI::ExistingFile);
  spl->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  spl->add_option("--K", K)->required()->check(CLI::PositiveNumber);
  add_common(spl, common);

  auto* bench = app.add_subcommand("bench", "Median query counts on planted Close instances");
  bench->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  bench->add_option("--n", n_list, "Comma-separated lengths")->required()->delimiter(',');
  bench->add_option("--trials", trials)->check(CLI::PositiveNumber);
  bench->add_option("--preset", preset_name)->check(CLI::IsMember({"subpoly", "polylog", "poly"}));
  bench->add_option("--eps", eps)->check(CLI::Range(0.0, 1.0));
  bench->add_option("--K", K, "Poly preset gap");
  add_common(bench, common);

  auto* self = app.add_subcommand("selftest", "Exhaustive small-instance checks");
  add_common(self, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const SolverOptions opts = common.options();
    const auto t0 = std::chrono::steady_clock::now();

    if (gap->parsed()) {
      const Str xs = read_file_bytes(file_x);
      const Str ys = read_file_bytes(file_y);
      auto counter = std::make_shared<QueryCounter>();
      const QueriedString x(xs, counter, 'X');
      const QueriedString y(ys, counter, 'Y');
      Rng rng(common.seed);
      const auto preset = parse_preset(preset_name, eps, K);
      if (!preset && gap->count("--K") == 0) throw CLI::ValidationError("--K", "required without --preset");
      GapDecision d;
      try {
        d = preset ? gap_ed_preset(x, y, k, *preset, rng, opts) : gap_ed(x, y, k, K, delta, rng, opts);
      } catch (const GapRefused& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
      }
      RunReport r = make_report("gap-ed", d, since(t0));
      r.preset = preset_name.empty() ? "none" : preset_name;
      r.params = {{"k", k}, {"K", static_cast<double>(preset ? d.diagnostics["preset.K"] : K)},
                  {"delta", static_cast<double>(preset ? d.diagnostics["preset.delta"] : delta)},
                  {"n", static_cast<double>(std::max(xs.size(), ys.size()))}};
      if (preset_name == "polylog") r.params["eps"] = eps;
      r.cert = certify(xs, ys);
      emit(r, common.format);
      return 0;
    }

    if (exact->parsed()) {
      const Str xs = read_file_bytes(file_x);
      const Str ys = read_file_bytes(file_y);
      RunReport r;
      r.command = "exact-ed";
      r.verdict = "n/a";
      r.seed = common.seed;
      const std::size_t ed = ed_lv_doubling(xs, ys);
      r.wall_nanos = since(t0);
      r.cert = {Certificate::Kind::Exact, ed};
      r.counters["exact.ed"] = static_cast<double>(ed);
      emit(r, common.format);
      return 0;
    }

    if (bp->parsed()) {
      const Str xs = read_file_bytes(file_x);
      auto counter = std::make_shared<QueryCounter>();
      const QueriedString x(xs, counter, 'X');
      Rng rng(common.seed);
      const std::size_t divisor = K == 0 ? p : std::max(K, p);
      const auto sampled = sample_breaks(x.whole(), p, divisor, 0.01, rng);
      const double rate = break_sampling_rate(xs.size(), divisor, 0.01);
      RunReport r;
      r.command = "bp-estimate";
      r.verdict = "n/a";
      r.seed = common.seed;
      r.queries = counter->queries();
      r.budget_spent = counter->units();
      r.params = {{"p", static_cast<double>(p)}, {"K", static_cast<double>(divisor)}};
      r.counters["bp.sampled_breaks"] = static_cast<double>(sampled.size());
      r.counters["bp.rate"] = rate;
      // BP_p lies within [b / 3, b + 3] of the break count b.
      r.counters["bp.estimate"] = rate > 0.0 ? static_cast<double>(sampled.size()) / rate : 0.0;
      if (opts.debug_oracle) r.counters["bp.exact"] = static_cast<double>(bp_exact(xs, p));
      r.wall_nanos = since(t0);
      emit(r, common.format);
      return 0;
    }

    if (per->parsed()) {
      const Str xs = read_file_bytes(file_x);
      RunReport r;
      r.command = "period";
      r.verdict = "n/a";
      r.seed = common.seed;
      r.counters["period"] = static_cast<double>(period(xs));
      r.counters["length"] = static_cast<double>(xs.size());
      r.wall_nanos = since(t0);
      emit(r, common.format);
      return 0;
    }

    if (spl->parsed()) {
      const Str xs = read_file_bytes(file_x);
      const Str ys = read_file_bytes(file_y);
      auto counter = std::make_shared<QueryCounter>();
      const QueriedString x(xs, counter, 'X');
      const QueriedString y(ys, counter, 'Y');
      Rng rng(common.seed);
      const SplitResult sp = split(x, y, k, K, opts.constants.split_delta, rng);
      RunReport r;
      r.command = "split";
      r.verdict = "n/a";
      r.seed = common.seed;
      r.queries = counter->queries();
      r.budget_spent = counter->units();
      r.params = {{"k", k}, {"K", static_cast<double>(K)}};
      r.counters["split.pieces"] = static_cast<double>(sp.pieces());
      r.counters["split.breaks"] = static_cast<double>(sp.sampled_breaks);
      if (opts.debug_oracle) {
        std::size_t sum = 0;
        for (std::size_t i = 0; i < sp.pieces(); ++i) {
          sum += ed_lv_doubling(Span(xs).subspan(sp.cuts_x[i], sp.cuts_x[i + 1] - sp.cuts_x[i]),
                                Span(ys).subspan(sp.cuts_y[i], sp.cuts_y[i + 1] - sp.cuts_y[i]));
        }
        r.counters["split.piece_ed_sum"] = static_cast<double>(sum);
      }
      r.wall_nanos = since(t0);
      emit(r, common.format);
      return 0;
    }

    if (bench->parsed()) {
      const Preset preset = parse_preset(preset_name.empty() ? "subpoly" : preset_name, eps, K).value();
      const auto rows = bench_queries(k, n_list, trials, common.seed, preset, opts);
      if (common.format == "json") {
        for (const auto& row : rows) {
          std::cout << nlohmann::json{{"n", row.n},
                                      {"k", row.k},
                                      {"K", row.K},
                                      {"queries_p50", row.queries_p50},
                                      {"queries_p90", row.queries_p90},
                                      {"budget_p50", row.budget_p50}}
                           .dump()
                    << "\n";
        }
      } else {
        std::cout << "n,k,K,queries_p50,queries_p90,budget_p50\n";
        for (const auto& row : rows) {
          std::cout << row.n << "," << row.k << "," << row.K << "," << row.queries_p50 << "," << row.queries_p90
                    << "," << row.budget_p50 << "\n";
        }
      }
      return 0;
    }

    if (self->parsed()) {
      bool ok = true;
      for (const auto& r : run_selftests(common.seed)) {
        std::cout << (r.failures == 0 ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks, "
                  << r.failures << " failures)";
        if (r.failures) std::cout << " first: " << r.first_failure;
        std::cout << "\n";
        ok = ok && r.failures == 0;
      }
      return ok ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
