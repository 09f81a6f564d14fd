#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "phishnet/indicator.hpp"
#include "phishnet/public_suffix.hpp"

namespace phishnet {

template <typename T>
struct Band {
  T lo;
  T hi;
};

struct ExtractionConfig {
  Band<int> url_length_thresholds{54, 75};
  Band<double> external_anchor_ratio_thresholds{0.31, 0.67};
  Band<double> external_resource_ratio_thresholds{0.22, 0.61};
  Band<double> misspelling_ratio_thresholds{0.01, 0.03};
  Band<int> redirect_count_thresholds{1, 3};
  int hex_escape_path_threshold = 5;
  double young_domain_days = 180.0;

  std::vector<std::string> trusted_ca_names;
  std::vector<std::string> brand_tokens;
  std::vector<std::string> security_keywords;
  std::vector<std::string> generic_salutations;
  std::vector<std::string> urgency_phrases;
  std::vector<std::string> mild_urgency_phrases;
  std::vector<std::string> dictionary;

  IndicatorValue missing_evidence_value = IndicatorValue::Doubtful;

  std::shared_ptr<const PublicSuffixList> public_suffixes;

  // Built-in defaults (keyword lists populated, bundled suffix snapshot).
  static ExtractionConfig defaults();

  const PublicSuffixList& suffixes() const;

  // Throws ConfigError on an incoherent band or a non-lowercase keyword.
  void validate() const;
};

// Reads a JSON config; absent keys keep their default. Threshold keys are the
// canonical indicator names:
//   long_url_address [lo, hi], abnormal_url_of_anchor [lo, hi],
//   abnormal_request_url [lo, hi], spelling_errors [lo, hi],
//   redirect_pages [lo, hi], hex_char_codes n, abnormal_dns_record days.
// List keys: trusted_ca_names, brand_tokens, security_keywords,
// generic_salutations, urgency_phrases, mild_urgency_phrases, dictionary.
// Scalars: missing_evidence_value, dictionary_file, public_suffix_file.
ExtractionConfig load_extraction_config(const std::string& path);
ExtractionConfig parse_extraction_config(const std::string& json_text,
                                         const std::string& base_dir = {});

}  // namespace phishnet
