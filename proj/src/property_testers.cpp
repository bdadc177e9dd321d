#include "gaped/property_testers.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gaped/exact_core.hpp"

namespace gaped {

const char* to_string(Verdict v) { return v == Verdict::Close ? "Close" : "Far"; }

std::size_t equality_sample_count(std::size_t n, double r, double delta) {
  const double want = std::ceil(r * static_cast<double>(n) * std::log(1.0 / delta));
  if (!(want > 0.0)) return 0;
  if (want >= static_cast<double>(n)) return n;
  return static_cast<std::size_t>(want);
}

namespace {

// a(i) and b(i) read position i of the two sides.
template <class A, class B>
TesterVerdict equality_core(std::size_t n, A&& a, B&& b, double r, double delta, Rng& rng, bool exhaustive) {
  TesterVerdict out;
  const std::size_t count = exhaustive ? n : equality_sample_count(n, r, delta);
  if (count >= n) {
    out.samples = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (a(i) != b(i)) {
        out.kind = Verdict::Far;
        out.mismatch = i;
        return out;
      }
    }
    return out;
  }
  out.samples = count;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t i = rng.below(n);
    if (a(i) != b(i)) {
      out.kind = Verdict::Far;
      out.mismatch = i;
      return out;
    }
  }
  return out;
}

std::vector<int> shifts_in_tie_order(int k) {
  std::vector<int> out{0};
  for (int d = 1; d <= k; ++d) {
    out.push_back(-d);
    out.push_back(d);
  }
  return out;
}

}  // namespace

TesterVerdict equality_test(const Fragment& x, const Fragment& y, double r, double delta, Rng& rng,
                            bool exhaustive) {
  if (x.size() != y.size()) throw std::invalid_argument("equality_test: length mismatch");
  if (!(r > 0.0)) throw std::invalid_argument("equality_test: rate must be positive");
  return equality_core(
      x.size(), [&](std::size_t i) { return x.read(i); }, [&](std::size_t i) { return y.read(i); }, r, delta,
      rng, exhaustive);
}

TesterVerdict matching_test(const Fragment& x, const Fragment& y, int k, double r, double delta, Rng& rng,
                            bool exhaustive) {
  if (k < 0 || y.size() != x.size() + 2 * static_cast<std::size_t>(k)) {
    throw std::invalid_argument("matching_test: need |Y| = |X| + 2k");
  }
  return matching_test_at(x, y.source(), static_cast<long long>(y.start()), k, r, delta, rng, exhaustive);
}

TesterVerdict matching_test_at(const Fragment& x, const QueriedString& y, long long y_start, int k, double r,
                               double delta, Rng& rng, bool exhaustive) {
  if (k < 0) throw std::invalid_argument("matching_test: k must be non-negative");
  if (!(r > 0.0)) throw std::invalid_argument("matching_test: rate must be positive");
  const long long m = static_cast<long long>(x.size());
  const long long ny = static_cast<long long>(y.size());
  std::vector<int> cands;
  for (int s : shifts_in_tie_order(k)) {
    const long long a = y_start + k + s;
    if (a >= 0 && a + m <= ny) cands.push_back(s);
  }
  TesterVerdict out;
  auto window_start = [&](int s) { return y_start + k + s; };

  if (!exhaustive && !cands.empty() && m > 0) {
    // Anchor positions prune shifts that disagree somewhere; each elimination
    // is backed by a concrete mismatch.
    const std::size_t anchors = 2 * static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(m) + 1.0))) + 1;
    for (std::size_t t = 0; t < anchors && !cands.empty(); ++t) {
      const std::size_t pos = rng.below(static_cast<std::uint64_t>(m));
      const Symbol c = x.read(pos);
      std::vector<int> keep;
      keep.reserve(cands.size());
      for (int s : cands) {
        if (y.read(static_cast<std::size_t>(window_start(s)) + pos) == c) {
          keep.push_back(s);
        } else {
          out.mismatch = pos;
        }
      }
      cands.swap(keep);
    }
  }

  const double per_delta = cands.empty() ? delta : delta / static_cast<double>(cands.size());
  for (int s : cands) {
    const Fragment w = y.slice(window_start(s), window_start(s) + m);
    TesterVerdict t = equality_test(x, w, r, per_delta, rng, exhaustive);
    out.samples += t.samples;
    if (t.kind == Verdict::Close) {
      out.kind = Verdict::Close;
      out.shift = s;
      out.mismatch.reset();
      return out;
    }
    out.mismatch = t.mismatch;
  }
  out.kind = Verdict::Far;
  return out;
}

TesterVerdict periodicity_test(const Fragment& x, std::size_t p, double r, double delta, Rng& rng,
                               bool exhaustive) {
  if (p < 1) throw std::invalid_argument("periodicity_test: p must be positive");
  if (!(r > 0.0)) throw std::invalid_argument("periodicity_test: rate must be positive");
  TesterVerdict out;
  if (x.empty()) {
    out.period = Str{};
    return out;
  }
  const std::size_t len = std::min(x.size(), 2 * p);
  const Str prefix = x.slice(0, static_cast<long long>(len)).materialize();
  const std::size_t q = period(prefix);
  if (q > p) {
    out.kind = Verdict::Far;
    return out;
  }
  Str root(prefix.begin(), prefix.begin() + static_cast<long>(q));
  if (len < x.size()) {
    const std::size_t rest = x.size() - len;
    TesterVerdict t = equality_core(
        rest, [&](std::size_t i) { return x.read(len + i); }, [&](std::size_t i) { return root[(len + i) % q]; },
        r, delta, rng, exhaustive);
    out.samples = t.samples;
    if (t.kind == Verdict::Far) {
      out.kind = Verdict::Far;
      out.mismatch = len + *t.mismatch;
      return out;
    }
  }
  out.period = std::move(root);
  return out;
}

}  // namespace gaped
