#pragma once

#include <array>
#include <string_view>

#include "phishnet/extraction_config.hpp"
#include "phishnet/indicator.hpp"
#include "phishnet/website_record.hpp"

namespace phishnet {

struct FeatureVector {
  std::array<IndicatorValue, kIndicatorCount> values{};

  IndicatorValue operator[](Indicator ind) const { return values[static_cast<std::size_t>(ind)]; }
  std::array<double, kIndicatorCount> encode() const;

  bool operator==(const FeatureVector&) const = default;
};

// Standalone indicator rules. Each reads only the evidence it names.
IndicatorValue ip_address_indicator(std::string_view url);
IndicatorValue url_length_indicator(std::string_view url, const ExtractionConfig& cfg);
IndicatorValue at_symbol_indicator(std::string_view url);
IndicatorValue prefix_suffix_indicator(std::string_view url, const ExtractionConfig& cfg);
IndicatorValue hex_char_indicator(std::string_view url, const ExtractionConfig& cfg);
IndicatorValue anchor_url_indicator(const WebsiteRecord& record, const ExtractionConfig& cfg);
IndicatorValue sfh_indicator(const WebsiteRecord& record, const ExtractionConfig& cfg);
IndicatorValue ssl_indicator(const WebsiteRecord& record, const ExtractionConfig& cfg);
IndicatorValue salutation_indicator(const WebsiteRecord& record, const ExtractionConfig& cfg);

IndicatorValue evaluate_indicator(Indicator id, const WebsiteRecord& record,
                                  const ExtractionConfig& cfg);
// Name-based dispatch; throws ConfigError for an unknown name.
IndicatorValue evaluate_indicator(std::string_view name, const WebsiteRecord& record,
                                  const ExtractionConfig& cfg);

// Throws a single ExtractionError when the URL is malformed.
FeatureVector extract_all(const WebsiteRecord& record, const ExtractionConfig& cfg);

}  // namespace phishnet
