#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phishnet/classifier.hpp"
#include "phishnet/errors.hpp"
#include "phishnet/extraction_config.hpp"
#include "phishnet/network.hpp"
#include "phishnet/website_record.hpp"

namespace phishnet {

template <typename T>
struct ParseResult {
  std::vector<T> items;
  std::vector<RowError> errors;  // skipped rows
};

// PhishTank export. Required columns: url, submission_time. Every row is
// labeled phish. Throws FormatError when a required column is missing.
ParseResult<WebsiteRecord> parse_phishtank_csv(std::string_view content);

// One URL per line; blank lines and '#' comments are skipped.
ParseResult<WebsiteRecord> parse_url_list(std::string_view content, Label label,
                                          Timestamp ingested_at);

struct CsvRow {
  std::size_t line = 0;  // 1-based line the row starts on
  std::vector<std::string> fields;
};

// Splits RFC 4180 CSV into rows. Blank lines are dropped. Throws FormatError
// on an unterminated quoted field.
std::vector<CsvRow> parse_csv(std::string_view content);
std::string csv_escape(std::string_view field);

inline constexpr double kDefaultMaxAgeDays = 2.25;
inline constexpr double kNoMaxAge = std::numeric_limits<double>::infinity();

// Keeps records with now - observed_at <= max_age_days, in order.
std::vector<WebsiteRecord> filter_stale(const std::vector<WebsiteRecord>& records, Timestamp now,
                                        double max_age_days = kDefaultMaxAgeDays);

// Header: the 27 canonical names then "label". Values render as 0, 0.5, 1.
// Unlabeled records and extraction failures become row errors.
struct FeatureMatrixExport {
  std::string csv;
  std::vector<RowError> errors;
};
FeatureMatrixExport export_feature_matrix(const std::vector<WebsiteRecord>& records,
                                          const ExtractionConfig& cfg);

// Inverse of export_feature_matrix. Throws FormatError on a bad header or cell.
std::vector<nn::Example> parse_feature_matrix(std::string_view csv);

struct DatasetSplit {
  std::vector<nn::Example> train;
  std::vector<nn::Example> test;
  std::uint64_t seed = 0;
  double train_fraction = 0.0;
};

// Seeded shuffle, then the first clamp(round(f * N), 1, N - 1) examples train.
DatasetSplit split_dataset(std::vector<nn::Example> examples, double train_fraction,
                           std::uint64_t seed);

// Append-only JSON-lines archive of WebsiteRecords.
class ArchiveStore {
 public:
  explicit ArchiveStore(std::string path);

  const std::string& path() const noexcept { return path_; }

  void append(const WebsiteRecord& record) const;
  void append(const std::vector<WebsiteRecord>& records) const;
  // A missing file reads as empty. Throws FormatError with the line number on
  // a malformed line.
  std::vector<WebsiteRecord> read_all() const;
  // Most recent record for the URL, if any.
  std::optional<WebsiteRecord> find(std::string_view url) const;

 private:
  std::string path_;
};

std::string record_to_json_line(const WebsiteRecord& record);
WebsiteRecord record_from_json_line(std::string_view line);

inline constexpr int kModelFormatVersion = 1;

struct SavedModel {
  nn::Network network;
  BandThresholds bands;
};

std::string serialize_model(const nn::Network& net, const BandThresholds& bands);
SavedModel deserialize_model(std::string_view text);
void save_model(const nn::Network& net, const BandThresholds& bands, const std::string& path);
SavedModel load_model(const std::string& path);

// Best-effort live collection. Throws FetchError when the site cannot be
// reached; any other missing evidence is left unset.
WebsiteRecord fetch_record(const std::string& url,
                           std::chrono::milliseconds timeout = std::chrono::seconds(10));

// Both throw IoError when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace phishnet
