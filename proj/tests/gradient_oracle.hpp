#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "phishnet/network.hpp"

// Finite-difference check of backprop increments. The loss is recomputed with
// plain loops in long double; nothing but the weight values is taken from the
// library under test.
namespace gradient_oracle {

using phishnet::nn::Index;

inline long double loss(const std::vector<long>& sizes, const std::vector<std::vector<long double>>& flat,
                        const std::vector<double>& input, const std::vector<double>& target) {
  std::vector<long double> a(input.begin(), input.end());
  for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
    const long n_in = sizes[l];
    const long n_out = sizes[l + 1];
    std::vector<long double> next(static_cast<std::size_t>(n_out));
    for (long i = 0; i < n_out; ++i) {
      long double sum = flat[l][static_cast<std::size_t>(n_in * n_out + i)];  // bias row
      for (long j = 0; j < n_in; ++j) {
        sum += flat[l][static_cast<std::size_t>(j * n_out + i)] * a[static_cast<std::size_t>(j)];
      }
      next[static_cast<std::size_t>(i)] = 1.0L / (1.0L + std::exp(-sum));
    }
    a = std::move(next);
  }
  long double e = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long double d = static_cast<long double>(target[i]) - a[i];
    e += 0.5L * d * d;
  }
  return e;
}

struct Summary {
  int trials = 0;
  std::size_t weights_checked = 0;
  double worst_relative_error = 0.0;
  bool increments_applied = true;  // backprop_update adds exactly the increments
};

// Pairs where both magnitudes are below 1e-12 count as agreeing.
inline Summary run(int trials, std::uint64_t seed, double lr = 0.3, long double eps = 1e-5L) {
  using namespace phishnet::nn;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> depth(2, 3);
  std::uniform_int_distribution<long> width(1, 5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Summary s;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Index> sizes(static_cast<std::size_t>(depth(gen)));
    for (auto& n : sizes) n = width(gen);
    const auto net = init_network(sizes, seed + static_cast<std::uint64_t>(trial));
    Example ex;
    ex.input = Vector<double>(sizes.front());
    for (Index i = 0; i < ex.input.size(); ++i) ex.input(i) = unit(gen);
    ex.target = Vector<double>(sizes.back());
    for (Index i = 0; i < ex.target.size(); ++i) ex.target(i) = unit(gen);

    const auto inc = weight_increments(net, ex, lr);
    const auto updated = backprop_update(net, ex, lr).network;
    const std::vector<long> lsizes(sizes.begin(), sizes.end());
    const std::vector<double> x(ex.input.data(), ex.input.data() + ex.input.size());
    const std::vector<double> t(ex.target.data(), ex.target.data() + ex.target.size());

    std::vector<std::vector<long double>> flat;
    for (const auto& w : net.weights()) {
      std::vector<long double> f;
      for (Index r = 0; r < w.rows(); ++r) {
        for (Index c = 0; c < w.cols(); ++c) f.push_back(w(r, c));
      }
      flat.push_back(std::move(f));
    }
    for (std::size_t l = 0; l < flat.size(); ++l) {
      const Index cols = net.weights(l).cols();
      for (std::size_t k = 0; k < flat[l].size(); ++k) {
        const long double w0 = flat[l][k];
        flat[l][k] = w0 + eps;
        const long double up = loss(lsizes, flat, x, t);
        flat[l][k] = w0 - eps;
        const long double down = loss(lsizes, flat, x, t);
        flat[l][k] = w0;
        const double fd = static_cast<double>(-lr * (up - down) / (2 * eps));
        const Index r = static_cast<Index>(k) / cols;
        const Index c = static_cast<Index>(k) % cols;
        const double bp = inc.increments[l](r, c);
        const double scale = std::max(std::abs(bp), std::abs(fd));
        if (scale > 1e-12) s.worst_relative_error = std::max(s.worst_relative_error, std::abs(bp - fd) / scale);
        if (updated.weights(l)(r, c) != net.weights(l)(r, c) + bp) s.increments_applied = false;
        ++s.weights_checked;
      }
    }
    ++s.trials;
  }
  return s;
}

}  // namespace gradient_oracle
