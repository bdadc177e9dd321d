#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gaped/exact_core.hpp"
#include "gaped/partition_tree.hpp"

namespace gaped {

struct ApproxFactor {
  double multiplicative = 1.0;
};

// Factor of the shipped all-shifts oracle (exact).
inline constexpr ApproxFactor kAllShiftsOracleFactor{1.0};
// Factor of periodic_all_shifts given the oracle above: 3 * 1^2.
inline constexpr ApproxFactor kPeriodicShiftsFactor{3.0};

// ED(P, T[i, i+m)) for every i in [0, n-m]. Neighbouring windows differ by
// at most 2, which seeds the cap for the next shift.
std::vector<std::size_t> ed_all_shifts_oracle(Span p, Span t);

// ED(P[0,r), Q[0,r)) + min_{|s|<p} (d ED(P, rot(Q, s)) + 2|s|) with d = n / p
// and r = n mod p. A shift of p or more is never better than its residue.
std::size_t periodic_ed_sandwich(Span p, Span q, std::size_t n);

bool has_period(Span x, std::size_t p);

// dist(u, w_i) in the graph u -> v_j (weight d e_j), v_j <-> v_{j+1 mod p}
// (weight 2), v_i -> w_i (weight f_i). Dijkstra with a binary heap.
std::vector<std::size_t> combine_shift_graph(std::span<const std::size_t> e, std::span<const std::size_t> f,
                                             std::size_t d);

// Approximations of ED(P, T[i, i+m)) for all i in [0, n-m] when both P and T
// have period p. T is first brought to length m+p-1 without changing any
// reported window.
std::vector<std::size_t> periodic_all_shifts(Span p_str, Span t, std::size_t p, std::size_t delta_param);

struct FastShiftsInput {
  std::size_t x_len = 0;  // |X_v|
  int k = 0;
  int s_star = 0;
  Str q;                  // primitive root from the periodicity test
  std::size_t p = 1;
  std::size_t delta_param = 2;
};

// eta_{v,s} for s in [-k, k] from the idealised strings T = Q*[0, |X_v|+2k)
// and S = T[k+s*, |X_v|+k+s*). No characters of X or Y are read.
ShiftTable fast_shifts_ed(const FastShiftsInput& in);

}  // namespace gaped
