#include "gaped/periodic_ed.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

namespace gaped {

std::vector<std::size_t> ed_all_shifts_oracle(Span p, Span t) {
  if (p.size() > t.size()) throw std::invalid_argument("ed_all_shifts_oracle: |P| > |T|");
  const std::size_t m = p.size();
  const std::size_t count = t.size() - m + 1;
  std::vector<std::size_t> out(count);
  out[0] = ed_lv_doubling(p, t.subspan(0, m));
  for (std::size_t i = 1; i < count; ++i) {
    const auto d = ed_landau_vishkin(p, t.subspan(i, m), out[i - 1] + 2);
    out[i] = d ? *d : ed_lv_doubling(p, t.subspan(i, m));
  }
  return out;
}

std::size_t periodic_ed_sandwich(Span p, Span q, std::size_t n) {
  const std::size_t len = p.size();
  if (len == 0 || q.size() != len) throw std::invalid_argument("periodic_ed_sandwich: need |P| = |Q| >= 1");
  const std::size_t d = n / len;
  const std::size_t r = n % len;
  Str qq(q.begin(), q.end());
  qq.insert(qq.end(), q.begin(), q.end() - 1);
  const auto rot = ed_all_shifts_oracle(p, qq);  // rot[j] = ED(P, rotation of Q by j)
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const long long L = static_cast<long long>(len);
  for (long long s = -(L - 1); s <= L - 1; ++s) {
    const std::size_t j = static_cast<std::size_t>(((s % L) + L) % L);
    best = std::min(best, d * rot[j] + 2 * static_cast<std::size_t>(s < 0 ? -s : s));
  }
  return ed_dp(p.subspan(0, r), q.subspan(0, r)) + best;
}

bool has_period(Span x, std::size_t p) {
  for (std::size_t i = 0; i + p < x.size(); ++i) {
    if (x[i] != x[i + p]) return false;
  }
  return true;
}

std::vector<std::size_t> combine_shift_graph(std::span<const std::size_t> e, std::span<const std::size_t> f,
                                             std::size_t d) {
  const std::size_t p = e.size();
  if (p == 0 || f.size() != p) throw std::invalid_argument("combine_shift_graph: need |e| = |f| >= 1");
  // Vertex 0 is u, 1..p are v_i, p+1..2p are w_i.
  const std::size_t nv = 2 * p + 1;
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> dist(nv, kInf);
  using Item = std::pair<std::uint64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[0] = 0;
  heap.emplace(0, 0);
  auto relax = [&](std::size_t to, std::uint64_t w) {
    if (w < dist[to]) {
      dist[to] = w;
      heap.emplace(w, to);
    }
  };
  while (!heap.empty()) {
    const auto [du, x] = heap.top();
    heap.pop();
    if (du != dist[x]) continue;
    if (x == 0) {
      for (std::size_t i = 0; i < p; ++i) relax(1 + i, du + d * e[i]);
    } else if (x <= p) {
      const std::size_t i = x - 1;
      relax(1 + (i + 1) % p, du + 2);
      relax(1 + (i + p - 1) % p, du + 2);
      relax(1 + p + i, du + f[i]);
    }
  }
  return std::vector<std::size_t>(dist.begin() + 1 + static_cast<long>(p), dist.end());
}

std::vector<std::size_t> periodic_all_shifts(Span p_str, Span t, std::size_t p, std::size_t delta_param) {
  const std::size_t m = p_str.size();
  const std::size_t n = t.size();
  if (p < 1) throw std::invalid_argument("periodic_all_shifts: p must be positive");
  if (m > n) throw std::invalid_argument("periodic_all_shifts: |P| > |T|");
  if (delta_param < 2 || delta_param > p) throw std::invalid_argument("periodic_all_shifts: need 2 <= Delta <= p");
  if (!has_period(p_str, p) || !has_period(t, p)) throw std::invalid_argument("periodic_all_shifts: inputs lack period p");

  if (n == 0) return {0};
  const std::size_t d = m / p;
  const std::size_t r = m % p;
  const std::size_t needed = std::min(p, n - m + 1);
  std::vector<std::size_t> out(n - m + 1);

  // Only the prefix feeding e and f is materialised. Extending continues the
  // period; when T is shorter than p the filler never reaches a reported window.
  const std::size_t target = std::max(d > 0 ? 2 * p - 1 : 0, r + needed - 1);
  Str tt(t.begin(), t.begin() + static_cast<long>(std::min(n, target)));
  while (tt.size() < target) {
    const std::size_t j = tt.size();
    tt.push_back(j >= p && n >= p ? tt[j - p] : t[j % n]);
  }
  const Span tn(tt);

  const auto fr = ed_all_shifts_oracle(p_str.subspan(0, r), tn.subspan(0, r + needed - 1));
  if (d == 0) {
    // Every u -> v_i edge weighs 0, so dist(u, w_i) = f_i and the graph is moot.
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fr[i % p];
    return out;
  }
  std::vector<std::size_t> f(p, 0);
  const auto e = ed_all_shifts_oracle(p_str.subspan(0, p), tn.subspan(0, 2 * p - 1));
  std::copy(fr.begin(), fr.end(), f.begin());
  const auto g = combine_shift_graph(e, f, d);

  for (std::size_t i = 0; i < out.size(); ++i) out[i] = g[i % p];
  return out;
}

ShiftTable fast_shifts_ed(const FastShiftsInput& in) {
  const std::size_t qlen = in.q.size();
  if (qlen == 0 || in.k < 0 || in.s_star < -in.k || in.s_star > in.k || in.p < qlen) {
    throw std::invalid_argument("fast_shifts_ed: preconditions unmet");
  }
  const std::size_t k = static_cast<std::size_t>(in.k);
  const std::size_t m = in.x_len;
  Str t(m + 2 * k);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = in.q[i % qlen];
  const std::size_t off = static_cast<std::size_t>(in.k + in.s_star);
  const Span s_str = Span(t).subspan(off, m);
  const std::size_t period_used = qlen * ((in.p + qlen - 1) / qlen);
  const std::size_t dlt = std::clamp<std::size_t>(in.delta_param, 2, std::max<std::size_t>(2, period_used));
  const auto g = periodic_all_shifts(s_str, t, std::max<std::size_t>(period_used, dlt), dlt);
  ShiftTable out(in.k);
  for (int s = -in.k; s <= in.k; ++s) out.at(s) = static_cast<double>(g[static_cast<std::size_t>(s + in.k)]);
  return out;
}

}  // namespace gaped
