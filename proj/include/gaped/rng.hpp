#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gaped {

std::uint64_t splitmix64(std::uint64_t x);

// Seeded generator. Children are derived by hashing (seed, purpose, index),
// so a recursion path maps to a reproducible stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }
  Rng derive(std::string_view purpose, std::uint64_t index = 0) const;

  // Uniform on (0, 1].
  double unit();
  bool bernoulli(double p);
  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  std::mt19937_64& engine() { return eng_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace gaped
