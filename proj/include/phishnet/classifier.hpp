#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phishnet/extraction_config.hpp"
#include "phishnet/features.hpp"
#include "phishnet/network.hpp"
#include "phishnet/website_record.hpp"

namespace phishnet {

enum class VerdictBand : int { VeryLegitimate = 0, Legitimate, Suspicious, Phishing, VeryPhishy };

inline constexpr std::size_t kBandCount = 5;

std::string_view to_string(VerdictBand b) noexcept;
std::optional<VerdictBand> parse_band(std::string_view s) noexcept;

// Four strictly increasing cut points in (0, 1). Intervals are lower-inclusive:
// [0, c1), [c1, c2), [c2, c3), [c3, c4), [c4, 1].
struct BandThresholds {
  std::array<double, 4> cut_points{0.2, 0.4, 0.6, 0.8};

  void validate() const;
  bool operator==(const BandThresholds&) const = default;
};

struct PhishVerdict {
  double score = 0.0;
  VerdictBand band = VerdictBand::Suspicious;
};

// Throws RangeError for scores outside [0, 1].
VerdictBand band_score(double score, const BandThresholds& bands = {});

inline constexpr double kDecisionThreshold = 0.5;

nn::Vector<double> encode_features(const FeatureVector& fv);

PhishVerdict classify(const WebsiteRecord& record, const nn::Network& net,
                      const ExtractionConfig& cfg, const BandThresholds& bands = {});

// Throws ConfigError naming the URL of the first unlabeled record.
std::vector<nn::Example> build_dataset(const std::vector<WebsiteRecord>& records,
                                       const ExtractionConfig& cfg);

struct EvalReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;
  double accuracy = 0.0;
  double error_rate = 0.0;
  std::array<std::size_t, kBandCount> band_histogram{};

  std::size_t total() const noexcept { return tp + fp + tn + fn; }
};

// Positive class is phish (target >= 0.5); prediction is phish when score >= 0.5.
EvalReport evaluate(const nn::Network& net, const std::vector<nn::Example>& examples,
                    const BandThresholds& bands = {});

// Accuracy of always predicting the more frequent label (ties go to legit).
double majority_baseline_accuracy(const std::vector<nn::Example>& examples);

std::string render_text(const EvalReport& report);
// Stable key order: tp, fp, tn, fn, total, accuracy, error_rate, bands.
std::string render_json(const EvalReport& report);

}  // namespace phishnet
