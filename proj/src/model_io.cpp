#include <cmath>

#include <json.hpp>

#include "phishnet/data_io.hpp"

namespace phishnet {

namespace {

using json = nlohmann::ordered_json;

}  // namespace

std::string serialize_model(const nn::Network& net, const BandThresholds& bands) {
  json j;
  j["format_version"] = kModelFormatVersion;
  j["layer_sizes"] = net.layer_sizes();
  j["activation"] = "sigmoid";
  json weights = json::array();
  for (const auto& w : net.weights()) {
    json flat = json::array();
    for (Eigen::Index r = 0; r < w.rows(); ++r) {
      for (Eigen::Index c = 0; c < w.cols(); ++c) flat.push_back(w(r, c));
    }
    weights.push_back(std::move(flat));
  }
  j["weights"] = std::move(weights);
  j["band_thresholds"] = bands.cut_points;
  return j.dump(1) + "\n";
}

SavedModel deserialize_model(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw CorruptFileError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw CorruptFileError("model file is not a JSON object");
  if (!j.contains("format_version") || !j.at("format_version").is_number_integer()) {
    throw CorruptFileError("model file has no integer format_version");
  }
  const auto version = j.at("format_version").get<long long>();
  if (version != kModelFormatVersion) {
    throw VersionError("model format_version " + std::to_string(version) + " is not supported (expected " +
                       std::to_string(kModelFormatVersion) + ")");
  }

  std::vector<nn::Index> sizes;
  SavedModel model;
  try {
    for (const char* key : {"layer_sizes", "activation", "weights", "band_thresholds"}) {
      if (!j.contains(key)) throw CorruptFileError(std::string("model file is missing '") + key + "'");
    }
    if (j.at("activation") != "sigmoid") {
      throw CorruptFileError("unsupported activation " + j.at("activation").dump());
    }
    sizes = j.at("layer_sizes").get<std::vector<nn::Index>>();
    const auto cuts = j.at("band_thresholds").get<std::vector<double>>();
    if (cuts.size() != 4) throw CorruptFileError("band_thresholds must have 4 cut points");
    std::copy(cuts.begin(), cuts.end(), model.bands.cut_points.begin());

    const auto& weights = j.at("weights");
    if (!weights.is_array()) throw CorruptFileError("weights must be a list");
    if (sizes.size() < 2 || weights.size() != sizes.size() - 1) {
      throw ModelShapeError("model has " + std::to_string(sizes.size()) + " layers but " +
                            std::to_string(weights.size()) + " weight matrices");
    }
    std::vector<nn::Matrix<double>> mats;
    for (std::size_t l = 0; l < weights.size(); ++l) {
      if (sizes[l] < 1 || sizes[l + 1] < 1) throw ModelShapeError("layer sizes must be positive");
      const nn::Index rows = sizes[l] + 1;
      const nn::Index cols = sizes[l + 1];
      const auto& flat = weights[l];
      if (!flat.is_array() || static_cast<nn::Index>(flat.size()) != rows * cols) {
        throw ModelShapeError("weight matrix " + std::to_string(l) + " has " + std::to_string(flat.size()) +
                              " values, expected " + std::to_string(rows * cols));
      }
      nn::Matrix<double> m(rows, cols);
      for (nn::Index r = 0; r < rows; ++r) {
        for (nn::Index c = 0; c < cols; ++c) {
          const auto& v = flat[static_cast<std::size_t>(r * cols + c)];
          if (!v.is_number()) throw CorruptFileError("non-numeric weight in matrix " + std::to_string(l));
          m(r, c) = v.get<double>();
          if (!std::isfinite(m(r, c))) throw CorruptFileError("non-finite weight in matrix " + std::to_string(l));
        }
      }
      mats.push_back(std::move(m));
    }
    model.network = nn::Network(sizes, std::move(mats));
  } catch (const json::exception& e) {
    throw CorruptFileError(std::string("malformed model field: ") + e.what());
  } catch (const ShapeError& e) {
    throw ModelShapeError(e.what());
  } catch (const ConfigError& e) {
    throw ModelShapeError(e.what());
  }
  try {
    model.bands.validate();
  } catch (const ConfigError& e) {
    throw CorruptFileError(e.what());
  }
  return model;
}

void save_model(const nn::Network& net, const BandThresholds& bands, const std::string& path) {
  bands.validate();
  write_file(path, serialize_model(net, bands));
}

SavedModel load_model(const std::string& path) { return deserialize_model(read_file(path)); }

}  // namespace phishnet
