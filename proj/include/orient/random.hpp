#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orient/rational.hpp"

namespace orient {

/// SplitMix64 finalizer; used to fan one seed out into independent streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream = 0);

/// Deterministic generator. Only the raw 64-bit engine output is consumed,
/// so results do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// True with probability exactly p (p clamped to [0,1]), compared against
  /// the 64-bit draw without rounding.
  bool bernoulli(const Rational& p);

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  bool coin() { return (next() >> 63) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace orient
