#include "phishnet/classifier.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "phishnet/errors.hpp"

namespace phishnet {

namespace {

constexpr std::string_view kBandNames[kBandCount] = {"VeryLegitimate", "Legitimate", "Suspicious",
                                                     "Phishing", "VeryPhishy"};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string_view to_string(VerdictBand b) noexcept { return kBandNames[static_cast<std::size_t>(b)]; }

std::optional<VerdictBand> parse_band(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kBandCount; ++i) {
    if (kBandNames[i] == s) return static_cast<VerdictBand>(i);
  }
  return std::nullopt;
}

void BandThresholds::validate() const {
  double prev = 0.0;
  for (double c : cut_points) {
    if (!(c > prev) || !(c < 1.0)) {
      throw ConfigError("band cut points must be strictly increasing inside (0, 1)");
    }
    prev = c;
  }
}

VerdictBand band_score(double score, const BandThresholds& bands) {
  if (!(score >= 0.0 && score <= 1.0)) {
    throw RangeError("score " + std::to_string(score) + " is outside [0, 1]");
  }
  std::size_t band = 0;
  while (band < bands.cut_points.size() && score >= bands.cut_points[band]) ++band;
  return static_cast<VerdictBand>(band);
}

nn::Vector<double> encode_features(const FeatureVector& fv) {
  const auto enc = fv.encode();
  nn::Vector<double> v(static_cast<Eigen::Index>(kIndicatorCount));
  for (std::size_t i = 0; i < kIndicatorCount; ++i) v(static_cast<Eigen::Index>(i)) = enc[i];
  return v;
}

PhishVerdict classify(const WebsiteRecord& record, const nn::Network& net, const ExtractionConfig& cfg,
                      const BandThresholds& bands) {
  if (net.input_size() != static_cast<nn::Index>(kIndicatorCount) || net.output_size() != 1) {
    throw ShapeError("classifier needs a network with " + std::to_string(kIndicatorCount) +
                     " inputs and 1 output, got " + std::to_string(net.input_size()) + " -> " +
                     std::to_string(net.output_size()));
  }
  const auto input = encode_features(extract_all(record, cfg));
  const double score = nn::predict(net, input)(0);
  return {score, band_score(score, bands)};
}

std::vector<nn::Example> build_dataset(const std::vector<WebsiteRecord>& records,
                                       const ExtractionConfig& cfg) {
  std::vector<nn::Example> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    if (!r.label) throw ConfigError("record '" + r.url + "' has no label");
    nn::Example ex;
    ex.input = encode_features(extract_all(r, cfg));
    ex.target = nn::Vector<double>::Constant(1, *r.label == Label::Phish ? 1.0 : 0.0);
    out.push_back(std::move(ex));
  }
  return out;
}

EvalReport evaluate(const nn::Network& net, const std::vector<nn::Example>& examples,
                    const BandThresholds& bands) {
  if (examples.empty()) throw ConfigError("cannot evaluate an empty example list");
  if (net.output_size() != 1) {
    throw ShapeError("evaluation needs a single-output network, got " + std::to_string(net.output_size()));
  }
  EvalReport report;
  for (const auto& ex : examples) {
    nn::check_example(net, ex);
    const double score = nn::predict(net, ex.input)(0);
    const bool predicted = score >= kDecisionThreshold;
    const bool actual = ex.target(0) >= kDecisionThreshold;
    if (predicted && actual) ++report.tp;
    else if (predicted) ++report.fp;
    else if (actual) ++report.fn;
    else ++report.tn;
    ++report.band_histogram[static_cast<std::size_t>(band_score(score, bands))];
  }
  report.accuracy = static_cast<double>(report.tp + report.tn) / static_cast<double>(report.total());
  report.error_rate = 1.0 - report.accuracy;
  return report;
}

double majority_baseline_accuracy(const std::vector<nn::Example>& examples) {
  if (examples.empty()) throw ConfigError("cannot compute a baseline of an empty example list");
  std::size_t positives = 0;
  for (const auto& ex : examples) {
    if (ex.target(0) >= kDecisionThreshold) ++positives;
  }
  const std::size_t majority = std::max(positives, examples.size() - positives);
  return static_cast<double>(majority) / static_cast<double>(examples.size());
}

std::string render_text(const EvalReport& r) {
  std::ostringstream os;
  os << "examples=" << r.total() << "\n"
     << "tp=" << r.tp << " fp=" << r.fp << " tn=" << r.tn << " fn=" << r.fn << "\n"
     << "accuracy=" << fixed6(r.accuracy) << " error_rate=" << fixed6(r.error_rate) << "\n";
  for (std::size_t i = 0; i < kBandCount; ++i) {
    os << "band " << kBandNames[i] << "=" << r.band_histogram[i] << "\n";
  }
  return os.str();
}

std::string render_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["tp"] = r.tp;
  j["fp"] = r.fp;
  j["tn"] = r.tn;
  j["fn"] = r.fn;
  j["total"] = r.total();
  j["accuracy"] = r.accuracy;
  j["error_rate"] = r.error_rate;
  nlohmann::ordered_json bands;
  for (std::size_t i = 0; i < kBandCount; ++i) bands[std::string(kBandNames[i])] = r.band_histogram[i];
  j["bands"] = bands;
  return j.dump(2) + "\n";
}

}  // namespace phishnet
