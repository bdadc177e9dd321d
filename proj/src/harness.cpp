#include "gaped/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gaped/exact_core.hpp"
#include "gaped/trials.hpp"

namespace gaped {

namespace {

using json = nlohmann::json;

const char* cert_kind_name(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::Exact: return "exact";
    case Certificate::Kind::UpperBound: return "upper_bound";
    default: return "none";
  }
}

Certificate::Kind cert_kind_from(const std::string& s) {
  if (s == "exact") return Certificate::Kind::Exact;
  if (s == "upper_bound") return Certificate::Kind::UpperBound;
  return Certificate::Kind::None;
}

Symbol random_symbol(std::size_t alphabet, Rng& rng) { return static_cast<Symbol>(rng.below(alphabet)); }

}  // namespace

Str random_string(std::size_t n, std::size_t alphabet, Rng& rng) {
  Str out(n);
  for (auto& c : out) c = random_symbol(alphabet, rng);
  return out;
}

Str apply_random_edits(const Str& x, std::size_t edits, std::size_t alphabet, Rng& rng) {
  if (alphabet < 2) throw std::invalid_argument("edits need an alphabet of at least 2 symbols");
  Str y = x;
  for (std::size_t e = 0; e < edits; ++e) {
    const std::uint64_t op = y.empty() ? 1 : rng.below(3);
    if (op == 0) {
      const std::size_t i = rng.below(y.size());
      Symbol c = random_symbol(alphabet - 1, rng);
      if (c >= y[i]) ++c;
      y[i] = c;
    } else if (op == 1) {
      const std::size_t i = rng.below(y.size() + 1);
      y.insert(y.begin() + static_cast<long>(i), random_symbol(alphabet, rng));
    } else {
      y.erase(y.begin() + static_cast<long>(rng.below(y.size())));
    }
  }
  return y;
}

Str read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_ascii(bytes);
}

Instance generate(const InstanceSpec& spec) {
  if (spec.kind != InstanceKind::FromFiles && spec.alphabet < 2) {
    throw std::invalid_argument("generate: alphabet must have at least 2 symbols");
  }
  Rng rng(spec.seed);
  Instance out;
  std::optional<std::size_t> bound;
  switch (spec.kind) {
    case InstanceKind::PlantedEdits:
      out.x = random_string(spec.n, spec.alphabet, rng);
      out.y = apply_random_edits(out.x, spec.k_true, spec.alphabet, rng);
      bound = spec.k_true;
      break;
    case InstanceKind::IndependentRandom:
      out.x = random_string(spec.n, spec.alphabet, rng);
      out.y = random_string(spec.n, spec.alphabet, rng);
      break;
    case InstanceKind::Periodic: {
      if (spec.period < 1) throw std::invalid_argument("generate: period must be positive");
      const Str root = random_string(spec.period, spec.alphabet, rng);
      out.x.resize(spec.n);
      for (std::size_t i = 0; i < spec.n; ++i) out.x[i] = root[i % root.size()];
      const auto edits = static_cast<std::size_t>(std::llround(spec.corruption * static_cast<double>(spec.n)));
      out.y = apply_random_edits(out.x, edits, spec.alphabet, rng);
      bound = edits;
      break;
    }
    case InstanceKind::BlockPeriodic: {
      if (spec.p < 1 || spec.target_bp < 1) throw std::invalid_argument("generate: need p, target_bp >= 1");
      const std::size_t blocks = std::min(spec.target_bp, std::max<std::size_t>(spec.n, 1));
      for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t len = spec.n / blocks + (b < spec.n % blocks ? 1 : 0);
        const Str root = random_string(1 + rng.below(spec.p), spec.alphabet, rng);
        for (std::size_t i = 0; i < len; ++i) out.x.push_back(root[i % root.size()]);
      }
      out.y = apply_random_edits(out.x, spec.k_true, spec.alphabet, rng);
      bound = spec.k_true;
      break;
    }
    case InstanceKind::FromFiles:
      out.x = read_file_bytes(spec.path_x);
      out.y = read_file_bytes(spec.path_y);
      break;
  }
  if (std::max(out.x.size(), out.y.size()) <= kCertificateLimit) {
    out.cert = {Certificate::Kind::Exact, ed_dp(out.x, out.y)};
  } else if (bound) {
    out.cert = {Certificate::Kind::UpperBound, *bound};
  }
  return out;
}

std::string RunReport::to_json() const {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["verdict"] = verdict;
  j["queries"] = queries;
  j["budget_spent"] = budget_spent;
  j["wall_nanos"] = wall_nanos;
  j["seed"] = seed;
  j["params"] = params;
  j["preset"] = preset;
  j["certificate"] = {{"kind", cert_kind_name(cert.kind)}, {"value", cert.value}};
  j["counters"] = counters;
  return j.dump();
}

RunReport RunReport::from_json(const std::string& line) {
  const json j = json::parse(line);
  if (j.at("schema_version").get<int>() != kSchemaVersion) throw std::runtime_error("unsupported report schema");
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.verdict = j.at("verdict").get<std::string>();
  r.queries = j.at("queries").get<std::uint64_t>();
  r.budget_spent = j.at("budget_spent").get<std::uint64_t>();
  r.wall_nanos = j.at("wall_nanos").get<std::int64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.params = j.at("params").get<std::map<std::string, double>>();
  r.preset = j.at("preset").get<std::string>();
  r.cert.kind = cert_kind_from(j.at("certificate").at("kind").get<std::string>());
  r.cert.value = j.at("certificate").at("value").get<std::size_t>();
  r.counters = j.at("counters").get<std::map<std::string, double>>();
  return r;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << command << ": " << verdict << "\n"
     << "  queries      " << queries << "\n"
     << "  budget_spent " << budget_spent << "\n"
     << "  wall_ms      " << static_cast<double>(wall_nanos) / 1e6 << "\n"
     << "  seed         " << seed << "\n";
  if (!preset.empty()) os << "  preset       " << preset << "\n";
  for (const auto& [k, v] : params) os << "  " << k << " = " << v << "\n";
  if (cert.kind != Certificate::Kind::None) os << "  certificate  " << cert_kind_name(cert.kind) << " " << cert.value << "\n";
  for (const auto& [k, v] : counters) os << "  [" << k << "] " << v << "\n";
  return os.str();
}

std::string RunReport::csv_header() const {
  std::ostringstream os;
  os << "schema_version,command,verdict,queries,budget_spent,wall_nanos,seed,preset,cert_kind,cert_value";
  for (const auto& kv : params) os << ",param." << kv.first;
  for (const auto& kv : counters) os << "," << kv.first;
  return os.str();
}

std::string RunReport::csv_row() const {
  std::ostringstream os;
  os << kSchemaVersion << "," << command << "," << verdict << "," << queries << "," << budget_spent << ","
     << wall_nanos << "," << seed << "," << preset << "," << cert_kind_name(cert.kind) << "," << cert.value;
  for (const auto& kv : params) os << "," << kv.second;
  for (const auto& kv : counters) os << "," << kv.second;
  return os.str();
}

RunReport make_report(const std::string& command, const GapDecision& d, std::int64_t wall_nanos) {
  RunReport r;
  r.command = command;
  r.verdict = to_string(d.verdict);
  r.queries = d.queries;
  r.budget_spent = d.budget_spent;
  r.wall_nanos = wall_nanos;
  r.seed = d.seed;
  r.counters = d.diagnostics;
  return r;
}

double quantile(std::vector<double> v, double q) {
  if (v.empty()) throw std::invalid_argument("quantile of an empty sample");
  std::sort(v.begin(), v.end());
  const double rank = std::ceil(q * static_cast<double>(v.size()));
  const std::size_t i = static_cast<std::size_t>(std::clamp(rank, 1.0, static_cast<double>(v.size()))) - 1;
  return v[i];
}

std::vector<BenchRow> bench_queries(int k, const std::vector<std::size_t>& n_list, std::size_t trials,
                                    std::uint64_t seed, const Preset& preset, const SolverOptions& opts) {
  std::vector<BenchRow> rows;
  for (std::size_t n : n_list) {
    const Rng base(seed);
    const auto outcomes = run_trials_parallel(trials, [&](std::size_t t) {
      InstanceSpec spec;
      spec.kind = InstanceKind::PlantedEdits;
      spec.n = n;
      spec.alphabet = 256;
      spec.k_true = static_cast<std::size_t>(k);
      spec.seed = base.derive("bench-instance", n * 1000 + t).seed();
      const Instance inst = generate(spec);
      auto counter = std::make_shared<QueryCounter>();
      const QueriedString x(inst.x, counter, 'X');
      const QueriedString y(inst.y, counter, 'Y');
      Rng rng = base.derive("bench-run", n * 1000 + t);
      const GapDecision d = gap_ed_preset(x, y, k, preset, rng, opts);
      TrialOutcome o;
      o.verdict = d.verdict;
      o.queries = d.queries;
      o.budget_spent = d.budget_spent;
      return o;
    });
    std::vector<double> q, b;
    for (const auto& o : outcomes) {
      q.push_back(static_cast<double>(o.queries));
      b.push_back(static_cast<double>(o.budget_spent));
    }
    BenchRow row;
    row.n = n;
    row.k = k;
    row.K = preset_wiring(n, k, preset, opts.constants).K;
    row.queries_p50 = quantile(q, 0.5);
    row.queries_p90 = quantile(q, 0.9);
    row.budget_p50 = quantile(b, 0.5);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gaped
