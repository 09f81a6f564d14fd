#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "phishnet/errors.hpp"
#include "phishnet/random.hpp"

namespace phishnet::nn {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

template <typename Scalar>
Scalar sigmoid(Scalar x) {
  using std::exp;
  return Scalar(1) / (Scalar(1) + exp(-x));
}

template <typename Scalar>
Scalar sigmoid_prime(Scalar x) {
  const Scalar s = sigmoid(x);
  return s * (Scalar(1) - s);
}

// Feed-forward sigmoid network. weights()[l] maps layer l to layer l+1 and has
// shape (layer_sizes[l] + 1) x layer_sizes[l+1]; entry (j, i) is the weight
// from unit j to unit i and the last row holds the bias weights.
template <typename Scalar>
class BasicNetwork {
 public:
  BasicNetwork() = default;

  BasicNetwork(std::vector<Index> layer_sizes, std::vector<Matrix<Scalar>> weights)
      : layer_sizes_(std::move(layer_sizes)), weights_(std::move(weights)) {
    check_sizes(layer_sizes_);
    if (weights_.size() != layer_sizes_.size() - 1) {
      throw ShapeError("expected " + std::to_string(layer_sizes_.size() - 1) +
                       " weight matrices, got " + std::to_string(weights_.size()));
    }
    for (std::size_t l = 0; l < weights_.size(); ++l) {
      if (weights_[l].rows() != layer_sizes_[l] + 1 || weights_[l].cols() != layer_sizes_[l + 1]) {
        throw ShapeError("weight matrix " + std::to_string(l) + " has shape " +
                         std::to_string(weights_[l].rows()) + "x" +
                         std::to_string(weights_[l].cols()) + ", expected " +
                         std::to_string(layer_sizes_[l] + 1) + "x" +
                         std::to_string(layer_sizes_[l + 1]));
      }
    }
  }

  static BasicNetwork zeros(std::vector<Index> layer_sizes) {
    check_sizes(layer_sizes);
    std::vector<Matrix<Scalar>> w;
    for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
      w.push_back(Matrix<Scalar>::Zero(layer_sizes[l] + 1, layer_sizes[l + 1]));
    }
    return BasicNetwork(std::move(layer_sizes), std::move(w));
  }

  const std::vector<Index>& layer_sizes() const noexcept { return layer_sizes_; }
  const std::vector<Matrix<Scalar>>& weights() const noexcept { return weights_; }
  Matrix<Scalar>& weights(std::size_t layer) { return weights_.at(layer); }
  const Matrix<Scalar>& weights(std::size_t layer) const { return weights_.at(layer); }

  Index input_size() const { return layer_sizes_.front(); }
  Index output_size() const { return layer_sizes_.back(); }
  std::size_t layer_count() const noexcept { return layer_sizes_.size(); }

  Index weight_count() const {
    Index n = 0;
    for (const auto& m : weights_) n += m.size();
    return n;
  }

  template <typename Other>
  BasicNetwork<Other> cast() const {
    std::vector<Matrix<Other>> w;
    for (const auto& m : weights_) w.push_back(m.template cast<Other>());
    return BasicNetwork<Other>(layer_sizes_, std::move(w));
  }

  friend bool operator==(const BasicNetwork& a, const BasicNetwork& b) {
    if (a.layer_sizes_ != b.layer_sizes_) return false;
    for (std::size_t l = 0; l < a.weights_.size(); ++l) {
      if (a.weights_[l] != b.weights_[l]) return false;
    }
    return true;
  }

  static void check_sizes(const std::vector<Index>& sizes) {
    if (sizes.size() < 2) {
      throw ConfigError("a network needs at least 2 layers, got " + std::to_string(sizes.size()));
    }
    for (Index s : sizes) {
      if (s < 1) throw ConfigError("layer sizes must be positive, got " + std::to_string(s));
    }
  }

 private:
  std::vector<Index> layer_sizes_;
  std::vector<Matrix<Scalar>> weights_;
};

using Network = BasicNetwork<double>;

inline constexpr double kInitWeightBound = 0.5;

// Every weight, bias rows included, uniform in [-0.5, 0.5]. Matrices are filled
// in layer order, row-major.
template <typename Scalar = double>
BasicNetwork<Scalar> init_network(std::vector<Index> layer_sizes, std::uint64_t seed) {
  auto net = BasicNetwork<Scalar>::zeros(std::move(layer_sizes));
  Rng rng(seed);
  for (std::size_t l = 0; l + 1 < net.layer_count(); ++l) {
    auto& w = net.weights(l);
    for (Index r = 0; r < w.rows(); ++r) {
      for (Index c = 0; c < w.cols(); ++c) {
        w(r, c) = static_cast<Scalar>(unit_uniform(rng) * (2 * kInitWeightBound) - kInitWeightBound);
      }
    }
  }
  return net;
}

// Per-layer weighted inputs and activations. Layer 0 holds the raw input in
// both `in` and `a`.
template <typename Scalar>
struct LayerActivations {
  std::vector<Vector<Scalar>> in;
  std::vector<Vector<Scalar>> a;

  const Vector<Scalar>& output() const { return a.back(); }
};

template <typename Scalar>
void check_input(const BasicNetwork<Scalar>& net, Index input_len) {
  if (input_len != net.input_size()) {
    throw ShapeError("input has " + std::to_string(input_len) + " values, network expects " +
                     std::to_string(net.input_size()));
  }
}

template <typename Scalar, typename Derived>
LayerActivations<Scalar> forward(const BasicNetwork<Scalar>& net, const Eigen::MatrixBase<Derived>& input) {
  check_input(net, input.size());
  LayerActivations<Scalar> acts;
  acts.in.reserve(net.layer_count());
  acts.a.reserve(net.layer_count());
  acts.in.push_back(input);
  acts.a.push_back(input);
  for (std::size_t l = 0; l + 1 < net.layer_count(); ++l) {
    const auto& w = net.weights(l);
    const Index n = w.rows() - 1;
    Vector<Scalar> in = w.topRows(n).transpose() * acts.a.back() + w.row(n).transpose();
    Vector<Scalar> a = in.unaryExpr([](Scalar x) { return sigmoid(x); });
    acts.in.push_back(std::move(in));
    acts.a.push_back(std::move(a));
  }
  return acts;
}

template <typename Scalar, typename Derived>
Vector<Scalar> predict(const BasicNetwork<Scalar>& net, const Eigen::MatrixBase<Derived>& input) {
  return forward(net, input).output();
}

// Single sigmoid unit for the plain perceptron rule.
template <typename Scalar>
struct PerceptronUnit {
  Vector<Scalar> weights;
  Scalar bias{0};
};

// w_j += lr * a_j * (T - O), with the bias treated as an input fixed at 1.
template <typename Scalar, typename Derived>
PerceptronUnit<Scalar> perceptron_update(PerceptronUnit<Scalar> unit, const Eigen::MatrixBase<Derived>& input,
                                         Scalar target, Scalar lr) {
  if (unit.weights.size() != input.size()) {
    throw ShapeError("perceptron has " + std::to_string(unit.weights.size()) +
                     " weights but input has " + std::to_string(input.size()) + " values");
  }
  if (!(lr > Scalar(0))) throw ConfigError("learning rate must be positive");
  const Scalar out = sigmoid(Scalar(unit.weights.dot(input) + unit.bias));
  const Scalar err = target - out;
  unit.weights += lr * err * input;
  unit.bias += lr * err;
  return unit;
}

template <typename Scalar>
struct TrainingExample {
  Vector<Scalar> input;
  Vector<Scalar> target;
};

using Example = TrainingExample<double>;

// deltas[l] belongs to layer l + 1 (the input layer has none).
template <typename Scalar>
struct BackpropTrace {
  std::vector<Vector<Scalar>> deltas;
};

template <typename Scalar>
struct WeightIncrements {
  std::vector<Matrix<Scalar>> increments;  // same shapes as the network's weights
  BackpropTrace<Scalar> trace;
  Vector<Scalar> errors;  // T - O per output unit
  LayerActivations<Scalar> activations;
};

template <typename Scalar>
void check_example(const BasicNetwork<Scalar>& net, const TrainingExample<Scalar>& ex) {
  check_input(net, ex.input.size());
  if (ex.target.size() != net.output_size()) {
    throw ShapeError("target has " + std::to_string(ex.target.size()) +
                     " values, network has " + std::to_string(net.output_size()) + " outputs");
  }
}

// Output deltas Err_i * g'(in_i); hidden deltas g'(in_j) * sum_i w_ji * A_i
// using the weights as they were before this step. Increment for w_ji is
// lr * a_j * A_i (a_j = 1 on the bias row).
template <typename Scalar>
WeightIncrements<Scalar> weight_increments(const BasicNetwork<Scalar>& net,
                                           const TrainingExample<Scalar>& ex, Scalar lr) {
  check_example(net, ex);
  if (!(lr > Scalar(0))) throw ConfigError("learning rate must be positive");

  WeightIncrements<Scalar> out;
  out.activations = forward(net, ex.input);
  const auto& acts = out.activations;
  const std::size_t n_weights = net.layer_count() - 1;
  out.errors = ex.target - acts.output();

  auto gprime = [](const Vector<Scalar>& in) {
    return in.unaryExpr([](Scalar x) { return sigmoid_prime(x); }).eval();
  };

  out.trace.deltas.resize(n_weights);
  out.trace.deltas[n_weights - 1] = out.errors.cwiseProduct(gprime(acts.in.back()));
  for (std::size_t l = n_weights - 1; l > 0; --l) {
    const auto& w = net.weights(l);
    const Index n = w.rows() - 1;
    Vector<Scalar> back = w.topRows(n) * out.trace.deltas[l];
    out.trace.deltas[l - 1] = gprime(acts.in[l]).cwiseProduct(back);
  }

  out.increments.resize(n_weights);
  for (std::size_t l = 0; l < n_weights; ++l) {
    const Index n = net.weights(l).rows() - 1;
    Vector<Scalar> a_bias(n + 1);
    a_bias.head(n) = acts.a[l];
    a_bias(n) = Scalar(1);
    out.increments[l] = lr * a_bias * out.trace.deltas[l].transpose();
  }
  return out;
}

template <typename Scalar>
struct BackpropResult {
  BasicNetwork<Scalar> network;
  BackpropTrace<Scalar> trace;
  Vector<Scalar> errors;
};

// One full update for a single example.
template <typename Scalar>
BackpropResult<Scalar> backprop_update(BasicNetwork<Scalar> net, const TrainingExample<Scalar>& ex,
                                       Scalar lr) {
  auto inc = weight_increments(net, ex, lr);
  for (std::size_t l = 0; l < inc.increments.size(); ++l) net.weights(l) += inc.increments[l];
  return {std::move(net), std::move(inc.trace), std::move(inc.errors)};
}

template <typename Scalar>
Scalar mse(const BasicNetwork<Scalar>& net, const std::vector<TrainingExample<Scalar>>& data) {
  if (data.empty()) throw ConfigError("mse of an empty dataset");
  Scalar total{0};
  for (const auto& ex : data) {
    check_example(net, ex);
    const Vector<Scalar> err = ex.target - predict(net, ex.input);
    total += Scalar(0.5) * err.squaredNorm();
  }
  return total / static_cast<Scalar>(data.size());
}

struct TrainConfig {
  double learning_rate = 0.5;
  int max_epochs = 1000;
  double mse_stop = 0.0;
  bool shuffle = true;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(learning_rate > 0.0)) throw ConfigError("learning_rate must be > 0");
    if (max_epochs < 1) throw ConfigError("max_epochs must be >= 1");
    if (!(mse_stop >= 0.0)) throw ConfigError("mse_stop must be >= 0");
  }
};

template <typename Scalar>
struct TrainResult {
  BasicNetwork<Scalar> network;
  std::vector<Scalar> mse_history;  // one entry per completed epoch
  std::size_t updates = 0;
};

// Sequential per-example updates; each epoch visits every example once, in a
// fresh seeded permutation when cfg.shuffle is set.
template <typename Scalar>
TrainResult<Scalar> train(BasicNetwork<Scalar> net, const std::vector<TrainingExample<Scalar>>& data,
                          const TrainConfig& cfg) {
  cfg.validate();
  if (data.empty()) throw ConfigError("cannot train on an empty dataset");
  for (const auto& ex : data) check_example(net, ex);

  TrainResult<Scalar> result;
  Rng rng(cfg.seed);
  std::vector<std::size_t> order(data.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const auto lr = static_cast<Scalar>(cfg.learning_rate);

  for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    if (cfg.shuffle) fisher_yates_shuffle(order, rng);
    for (std::size_t idx : order) {
      auto inc = weight_increments(net, data[idx], lr);
      for (std::size_t l = 0; l < inc.increments.size(); ++l) net.weights(l) += inc.increments[l];
      ++result.updates;
    }
    const Scalar epoch_mse = mse(net, data);
    result.mse_history.push_back(epoch_mse);
    if (epoch_mse <= static_cast<Scalar>(cfg.mse_stop)) break;
  }
  result.network = std::move(net);
  return result;
}

}  // namespace phishnet::nn
