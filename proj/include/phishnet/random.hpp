#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace phishnet {

// std::mt19937_64's output sequence is fixed by the standard, but the std
// distributions and std::shuffle are not. These helpers keep every seeded
// result bit-identical across standard libraries.
using Rng = std::mt19937_64;

// Uniform in [0, 1) with 53 random bits.
inline double unit_uniform(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound), bound > 0. Rejection sampling, no modulo bias.
inline std::uint64_t bounded_uniform(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
  std::uint64_t x = rng();
  while (x > limit) x = rng();
  return x % bound;
}

template <typename T>
void fisher_yates_shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(bounded_uniform(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace phishnet
