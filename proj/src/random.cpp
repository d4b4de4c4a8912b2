#include "orient/random.hpp"

#include <stdexcept>

namespace orient {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool Rng::bernoulli(const Rational& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  using u128 = unsigned __int128;
  const u128 draw = next();
  const u128 num = static_cast<std::uint64_t>(p.numerator());
  const u128 den = static_cast<std::uint64_t>(p.denominator());
  // draw / 2^64 < num / den
  return draw * den < (num << 64);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("Rng::below with zero bound");
  // 2^64 mod bound; draws below it would bias the low residues.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x = next();
  while (x < threshold) x = next();
  return x % bound;
}

}  // namespace orient
