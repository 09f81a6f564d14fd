#pragma once

#include <cstdint>
#include <vector>

#include "phishnet/indicator.hpp"
#include "phishnet/network.hpp"
#include "phishnet/random.hpp"

namespace synthetic {

inline constexpr int kPhishyQuorum = 14;

// 27-slot records: k slots Phishy (k uniform in 0..27), the rest randomly
// Legitimate or Doubtful. Label is phish iff k >= 14.
inline std::vector<phishnet::nn::Example> separable(std::size_t n, std::uint64_t seed) {
  using namespace phishnet;
  Rng rng(seed);
  std::vector<nn::Example> out;
  out.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto k = static_cast<std::size_t>(bounded_uniform(rng, kIndicatorCount + 1));
    std::vector<std::size_t> slots(kIndicatorCount);
    for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = i;
    fisher_yates_shuffle(slots, rng);
    nn::Example ex;
    ex.input = nn::Vector<double>(static_cast<nn::Index>(kIndicatorCount));
    for (std::size_t i = 0; i < kIndicatorCount; ++i) {
      const auto v = i < k ? IndicatorValue::Phishy
                           : (bounded_uniform(rng, 2) == 0 ? IndicatorValue::Legitimate : IndicatorValue::Doubtful);
      ex.input(static_cast<nn::Index>(slots[i])) = encode_value(v);
    }
    ex.target = nn::Vector<double>::Constant(1, k >= kPhishyQuorum ? 1.0 : 0.0);
    out.push_back(std::move(ex));
  }
  return out;
}

inline std::size_t phishy_count(const phishnet::nn::Example& ex) {
  return static_cast<std::size_t>((ex.input.array() == 1.0).count());
}

}  // namespace synthetic
