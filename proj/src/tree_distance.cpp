#include "gaped/tree_distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gaped/exact_core.hpp"
#include "gaped/periodic_ed.hpp"
#include "gaped/precision_sampling.hpp"
#include "gaped/property_testers.hpp"

namespace gaped {

namespace {

double log2_floor1(std::size_t n) { return std::max(1.0, std::log2(static_cast<double>(std::max<std::size_t>(n, 1)))); }

double log_base(double x, double base) { return std::log(x) / std::log(base); }

class TreeSolver {
 public:
  TreeSolver(const QueriedString& x, const QueriedString& y, const PartitionTree& tree, const TreeSolveParams& prm,
             Rng& rng, const SolverOptions& opts)
      : x_(x), y_(y), tree_(tree), prm_(prm), rng_(rng), opts_(opts), c_(opts.constants) {
    const std::size_t n = tree.leaves();
    eps_ = 1.0 / (2.0 * log2_floor1(n));
    tester_delta_ = c_.tester_delta / static_cast<double>(n);
    precision_delta_ = c_.precision_delta / (static_cast<double>(std::max(prm.k, 1)) * static_cast<double>(n));
    truncation_ = c_.precision_truncation * static_cast<double>(n);
  }

  ShiftTable visit(const TreeNode& v, double rate, double alpha) {
    ++stats.active;
    if (tree_.is_leaf(v)) return leaf(v);
    const int k = prm_.k;
    if (opts_.debug_oracle && !matched_exact(v)) ++stats.unmatched_active;
    if (!opts_.degenerate && interior(v)) {
      if (auto t = try_prune(v, rate)) return *t;
    }

    const auto kids = tree_.children(v);
    const double child_alpha = alpha * (1.0 - eps_);
    std::vector<ShiftTable> a;
    std::vector<Precision> u;
    a.reserve(kids.size());
    u.reserve(kids.size());
    for (const TreeNode& w : kids) {
      const Precision pu = opts_.degenerate ? Precision{1.0}
                                            : sample_precision(eps_, precision_delta_, rng_, truncation_);
      u.push_back(pu);
      a.push_back(range_min_plus(visit(w, rate / pu.u, child_alpha)));
    }
    charge(kids.size() * static_cast<std::uint64_t>(2 * k + 1));

    ShiftTable out(k);
    std::vector<double> est(kids.size());
    for (int s = -k; s <= k; ++s) {
      if (opts_.degenerate) {
        double sum = 0.0;
        for (const ShiftTable& t : a) sum += t.at(s);
        out.at(s) = sum;
        continue;
      }
      for (std::size_t i = 0; i < kids.size(); ++i) est[i] = a[i].at(s);
      out.at(s) = recover(est, u, eps_, precision_delta_, std::max(1.0, child_alpha), prm_.mu / rate);
    }
    return out;
  }

  TreeStats stats;

 private:
  long long wend(const TreeNode& v) const {
    return v.end == tree_.leaves() ? static_cast<long long>(y_.size()) : static_cast<long long>(v.end);
  }

  // Y_v = Y[begin - k, end + k) lies inside Y and is not stretched by the
  // right-boundary absorption.
  bool interior(const TreeNode& v) const {
    const long long k = prm_.k;
    const long long ny = static_cast<long long>(y_.size());
    if (static_cast<long long>(v.begin) - k < 0) return false;
    if (static_cast<long long>(v.end) + k > ny) return false;
    return v.end != tree_.leaves() || y_.size() == tree_.leaves();
  }

  ShiftTable leaf(const TreeNode& v) {
    ++stats.leaves;
    const int k = prm_.k;
    const long long ny = static_cast<long long>(y_.size());
    Str xv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) xv[i] = x_.read(v.begin + i);
    const long long lo = std::max(0LL, static_cast<long long>(v.begin) - k);
    const long long hi = std::min(ny, wend(v) + k);
    Str yw;
    for (long long j = lo; j < hi; ++j) yw.push_back(y_.read(static_cast<std::size_t>(j)));
    ShiftTable out(k);
    for (int s = -k; s <= k; ++s) {
      const long long a = std::clamp(static_cast<long long>(v.begin) + s, lo, std::max(lo, hi));
      const long long b = std::clamp(wend(v) + s, a, std::max(lo, hi));
      const Span w = Span(yw).subspan(static_cast<std::size_t>(a - lo), static_cast<std::size_t>(b - a));
      out.at(s) = static_cast<double>(ed_dp(xv, w));
      charge(static_cast<std::uint64_t>(w.size() + xv.size()));
    }
    return out;
  }

  std::optional<ShiftTable> try_prune(const TreeNode& v, double rate) {
    const int k = prm_.k;
    const double r = c_.tester_rate_factor * rate;
    const Fragment xv = x_.slice(static_cast<long long>(v.begin), static_cast<long long>(v.end));
    const long long ys = static_cast<long long>(v.begin) - k;
    ++stats.matching_tests;
    const TesterVerdict mt = matching_test_at(xv, y_, ys, k, r, tester_delta_, rng_);
    if (mt.kind != Verdict::Close) return std::nullopt;
    ++stats.periodicity_tests;
    const Fragment yv = y_.slice(ys, static_cast<long long>(v.end) + k);
    const TesterVerdict pt = periodicity_test(yv, prm_.p, r, tester_delta_, rng_);
    if (pt.kind != Verdict::Close || !pt.period || pt.period->empty()) return std::nullopt;

    FastShiftsInput in;
    in.x_len = v.size();
    in.k = k;
    in.s_star = *mt.shift;
    in.q = *pt.period;
    in.p = std::max(prm_.p, pt.period->size());
    in.delta_param = prm_.delta;
    ShiftTable eta = fast_shifts_ed(in);
    // The periodic solver touches at most one period beyond the window itself.
    const std::size_t qlen = in.q.size();
    const std::size_t period_used = qlen * ((in.p + qlen - 1) / qlen);
    charge(std::min(period_used, v.size()) + v.size() + 2 * static_cast<std::size_t>(k));
    ++stats.pruned;
    return eta;
  }

  bool matched_exact(const TreeNode& v) const {
    const Span xs = x_.raw();
    const Span ys = y_.raw();
    for (int s = -prm_.k; s <= prm_.k; ++s) {
      const auto [a, b] = tree_.y_window(v, s, ys.size());
      const Span w = clamp_window(ys, a, b);
      const Span xv = xs.subspan(v.begin, v.size());
      if (w.size() == xv.size() && std::equal(xv.begin(), xv.end(), w.begin())) return true;
    }
    return false;
  }

  void charge(std::uint64_t units) {
    if (auto* c = x_.counter()) c->charge(units);
  }

  const QueriedString& x_;
  const QueriedString& y_;
  const PartitionTree& tree_;
  TreeSolveParams prm_;
  Rng& rng_;
  const SolverOptions& opts_;
  const Constants& c_;
  double eps_ = 0.5;
  double tester_delta_ = 0.01;
  double precision_delta_ = 0.01;
  double truncation_ = 0.0;
};

}  // namespace

ShiftTable range_min_plus(const ShiftTable& a) {
  ShiftTable b = a;
  for (std::size_t i = 1; i < b.values.size(); ++i) b.values[i] = std::min(b.values[i], b.values[i - 1] + 2.0);
  for (std::size_t i = b.values.size(); i-- > 1;) b.values[i - 1] = std::min(b.values[i - 1], b.values[i] + 2.0);
  return b;
}

std::size_t choose_arity(std::size_t n, std::size_t delta, const Constants& c) {
  const std::size_t hi = std::max<std::size_t>(2, std::min(std::max<std::size_t>(n, 2), c.arity_max));
  if (n <= 2 || delta < 2) return 2;
  const double exponent = c.arity_exponent * log_base(static_cast<double>(n), static_cast<double>(delta));
  const double ell = std::ceil(std::pow(log2_floor1(n), exponent));
  if (!(ell < static_cast<double>(hi))) return hi;
  return std::max<std::size_t>(2, static_cast<std::size_t>(ell));
}

PartitionTree build_tree(std::size_t n, std::size_t arity, std::size_t K, double gamma, const Constants& c) {
  PartitionTree t(n, arity);
  t.alpha_root = c.alpha_root_factor * gamma;
  t.alpha_decay = 1.0 - 1.0 / (2.0 * log2_floor1(n));
  t.rate_root = c.rate_numerator * gamma * gamma / static_cast<double>(std::max<std::size_t>(K, 1));
  return t;
}

TreeSolveResult solve_tree(const QueriedString& x, const QueriedString& y, const PartitionTree& tree,
                           const TreeSolveParams& params, Rng& rng, const SolverOptions& opts) {
  if (x.size() != tree.leaves()) throw std::invalid_argument("solve_tree: tree does not match |X|");
  if (params.k < 0) throw std::invalid_argument("solve_tree: k must be non-negative");
  TreeSolver solver(x, y, tree, params, rng, opts);
  TreeSolveResult out;
  out.root = solver.visit(tree.root(), tree.rate_root, tree.alpha_root);
  out.stats = solver.stats;
  return out;
}

double small_bp_budget(std::size_t n, std::size_t K, std::size_t p, std::size_t B, std::size_t delta,
                       const SolverOptions& opts) {
  const Constants& c = opts.constants;
  const double nd = static_cast<double>(std::max<std::size_t>(n, 2));
  const double dd = static_cast<double>(std::max<std::size_t>(delta, 2));
  const double base = nd / static_cast<double>(std::max<std::size_t>(K, 1)) * dd +
                      static_cast<double>(p) * static_cast<double>(B) * dd;
  const double poly = std::pow(log2_floor1(n), c.small_bp_time_exponent * log_base(nd, dd));
  return c.small_bp_budget_factor * base * poly * opts.budget_multiplier;
}

GapDecision alg_small_bp(const QueriedString& x, const QueriedString& y, int k, std::size_t K, std::size_t p,
                         std::size_t B, std::size_t delta, Rng& rng, const SolverOptions& opts) {
  if (k < 0) throw std::invalid_argument("alg_small_bp: k must be non-negative");
  const std::size_t ku = static_cast<std::size_t>(k);
  if (p < ku || B < ku) throw std::invalid_argument("alg_small_bp: need p, B >= k");
  if (delta < 2 || delta > std::max<std::size_t>(x.size(), 2)) {
    throw std::invalid_argument("alg_small_bp: Delta out of range");
  }
  if (!x.charged() || x.counter() != y.counter()) {
    throw std::invalid_argument("alg_small_bp: X and Y must share one charged counter");
  }
  const Constants& c = opts.constants;
  GapDecision out;
  out.seed = rng.seed();
  QueryCounter& counter = *x.counter();
  const std::size_t n = x.size();
  if (n == 0) {
    out.verdict = y.size() <= ku ? Verdict::Close : Verdict::Far;
    out.queries = counter.queries();
    return out;
  }
  if (opts.debug_oracle) out.add("small_bp.bp_exact", static_cast<double>(bp_exact(x.raw(), p)));

  const double gamma = c.gamma;
  const std::size_t arity = choose_arity(n, delta, c);
  const PartitionTree tree = build_tree(n, arity, K, gamma, c);
  TreeSolveParams prm;
  prm.k = k;
  prm.p = p;
  prm.delta = delta;
  prm.mu = gamma;

  const double limit = small_bp_budget(n, K, p, B, delta, opts);
  QueryBudget budget;
  budget.limit = limit >= 1.8e19 ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(limit);
  out.add("small_bp.calls", 1);
  out.add("small_bp.arity", static_cast<double>(arity));
  out.add("small_bp.height", tree.height());
  try {
    BudgetScope scope(counter, budget);
    const TreeSolveResult r = solve_tree(x, y, tree, prm, rng, opts);
    const double eta = r.root.at(0);
    const double threshold = c.far_threshold * static_cast<double>(K) / gamma;
    out.verdict = eta >= threshold ? Verdict::Far : Verdict::Close;
    out.add("small_bp.eta_root", eta);
    out.add("small_bp.threshold", threshold);
    out.add("tree.active", static_cast<double>(r.stats.active));
    out.add("tree.pruned", static_cast<double>(r.stats.pruned));
    out.add("tree.leaves", static_cast<double>(r.stats.leaves));
    out.add("tree.matching_tests", static_cast<double>(r.stats.matching_tests));
    out.add("tree.periodicity_tests", static_cast<double>(r.stats.periodicity_tests));
    if (opts.debug_oracle) out.add("tree.unmatched_active", static_cast<double>(r.stats.unmatched_active));
  } catch (const BudgetExhausted& e) {
    if (e.owner() != &budget) throw;
    out.verdict = Verdict::Far;
    out.add("small_bp.interrupted", 1);
  }
  out.budget_spent = budget.spent;
  out.queries = counter.queries();
  return out;
}

}  // namespace gaped
