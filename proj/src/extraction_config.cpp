#include "phishnet/extraction_config.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "default_dictionary.hpp"
#include "phishnet/errors.hpp"

namespace phishnet {

namespace {

using json = nlohmann::json;

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '\'') {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool is_lower(const std::string& s) {
  for (char c : s) {
    if (std::isupper(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

template <typename T>
void read_band(const json& j, const char* key, Band<T>& band) {
  if (!j.contains(key)) return;
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ConfigError(std::string("config key '") + key + "' must be a [lo, hi] pair");
  }
  band.lo = v[0].get<T>();
  band.hi = v[1].get<T>();
}

void read_list(const json& j, const char* key, std::vector<std::string>& list) {
  if (!j.contains(key)) return;
  const auto& v = j.at(key);
  if (!v.is_array()) throw ConfigError(std::string("config key '") + key + "' must be a list");
  list.clear();
  for (const auto& item : v) {
    if (!item.is_string()) {
      throw ConfigError(std::string("config key '") + key + "' must contain strings");
    }
    list.push_back(item.get<std::string>());
  }
}

std::string resolve_path(const std::string& base_dir, const std::string& p) {
  if (base_dir.empty() || std::filesystem::path(p).is_absolute()) return p;
  return (std::filesystem::path(base_dir) / p).string();
}

}  // namespace

ExtractionConfig ExtractionConfig::defaults() {
  ExtractionConfig cfg;
  cfg.trusted_ca_names = {"digicert",   "let's encrypt", "isrg",      "sectigo",  "comodo",
                          "globalsign", "entrust",       "godaddy",   "geotrust", "thawte",
                          "verisign",   "amazon",        "google trust services", "microsoft",
                          "identrust",  "buypass",       "certum",    "quovadis", "symantec",
                          "starfield",  "actalis",       "harica",    "ssl.com",  "zerossl"};
  cfg.brand_tokens = {"sbi",        "onlinesbi", "paypal",   "amazon",    "apple",   "microsoft",
                      "google",     "facebook",  "netflix",  "chase",     "wellsfargo",
                      "bankofamerica", "citibank", "hsbc",   "barclays",  "icici",   "hdfc",
                      "ebay",       "dhl",       "fedex",    "instagram", "linkedin", "outlook",
                      "office365",  "dropbox",   "yahoo",    "santander", "lloyds",  "natwest"};
  cfg.security_keywords = {"secure",       "security",     "verify",    "verification",
                           "confirm",      "password",     "suspended", "locked",
                           "unauthorized", "unusual activity", "authenticate", "encrypted",
                           "protect",      "fraud",        "validate",  "restricted"};
  cfg.generic_salutations = {"dear customer",    "dear valued customer", "dear user",
                             "dear client",      "dear account holder",  "dear member",
                             "dear sir/madam",   "dear sir or madam",    "dear sir",
                             "dear madam",       "dear friend",          "hello user",
                             "hello customer",   "dear email user",      "dear online banking user"};
  cfg.urgency_phrases = {"immediately",         "urgent",           "act now",
                         "within 24 hours",     "within 48 hours",  "within 12 hours",
                         "will be suspended",   "will be closed",   "will be locked",
                         "will be terminated",  "expires today",    "final notice",
                         "last warning",        "right away",       "as soon as possible"};
  cfg.mild_urgency_phrases = {"soon", "shortly", "at your earliest convenience",
                              "in the coming days", "promptly"};
  cfg.dictionary = split_words(kDefaultDictionary);
  cfg.public_suffixes = std::shared_ptr<const PublicSuffixList>(&PublicSuffixList::bundled(),
                                                                [](const PublicSuffixList*) {});
  return cfg;
}

const PublicSuffixList& ExtractionConfig::suffixes() const {
  return public_suffixes ? *public_suffixes : PublicSuffixList::bundled();
}

void ExtractionConfig::validate() const {
  auto band = [](const char* name, auto b) {
    if (!(b.lo < b.hi)) throw ConfigError(std::string("threshold pair '") + name + "' needs lo < hi");
  };
  band("long_url_address", url_length_thresholds);
  band("abnormal_url_of_anchor", external_anchor_ratio_thresholds);
  band("abnormal_request_url", external_resource_ratio_thresholds);
  band("spelling_errors", misspelling_ratio_thresholds);
  band("redirect_pages", redirect_count_thresholds);
  if (hex_escape_path_threshold < 0) throw ConfigError("hex_char_codes threshold must be >= 0");
  if (!(young_domain_days >= 0)) throw ConfigError("abnormal_dns_record days must be >= 0");
  for (const auto* list : {&trusted_ca_names, &brand_tokens, &security_keywords,
                           &generic_salutations, &urgency_phrases, &mild_urgency_phrases}) {
    for (const auto& s : *list) {
      if (s.empty() || !is_lower(s)) throw ConfigError("keyword '" + s + "' must be non-empty lowercase");
    }
  }
}

ExtractionConfig parse_extraction_config(const std::string& json_text, const std::string& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  ExtractionConfig cfg = ExtractionConfig::defaults();
  try {
    read_band(j, "long_url_address", cfg.url_length_thresholds);
    read_band(j, "abnormal_url_of_anchor", cfg.external_anchor_ratio_thresholds);
    read_band(j, "abnormal_request_url", cfg.external_resource_ratio_thresholds);
    read_band(j, "spelling_errors", cfg.misspelling_ratio_thresholds);
    read_band(j, "redirect_pages", cfg.redirect_count_thresholds);
    if (j.contains("hex_char_codes")) cfg.hex_escape_path_threshold = j.at("hex_char_codes").get<int>();
    if (j.contains("abnormal_dns_record")) cfg.young_domain_days = j.at("abnormal_dns_record").get<double>();
    read_list(j, "trusted_ca_names", cfg.trusted_ca_names);
    read_list(j, "brand_tokens", cfg.brand_tokens);
    read_list(j, "security_keywords", cfg.security_keywords);
    read_list(j, "generic_salutations", cfg.generic_salutations);
    read_list(j, "urgency_phrases", cfg.urgency_phrases);
    read_list(j, "mild_urgency_phrases", cfg.mild_urgency_phrases);
    read_list(j, "dictionary", cfg.dictionary);
    if (j.contains("dictionary_file")) {
      const auto path = resolve_path(base_dir, j.at("dictionary_file").get<std::string>());
      std::ifstream in(path);
      if (!in) throw ConfigError("cannot read dictionary file '" + path + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      cfg.dictionary = split_words(ss.str());
    }
    if (j.contains("missing_evidence_value")) {
      const auto s = j.at("missing_evidence_value").get<std::string>();
      auto v = parse_indicator_value(s);
      if (!v) throw ConfigError("missing_evidence_value must be legitimate, doubtful or phishy");
      cfg.missing_evidence_value = *v;
    }
    if (j.contains("public_suffix_file")) {
      const auto path = resolve_path(base_dir, j.at("public_suffix_file").get<std::string>());
      cfg.public_suffixes = std::make_shared<const PublicSuffixList>(PublicSuffixList::from_file(path));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ExtractionConfig load_extraction_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_extraction_config(ss.str(), std::filesystem::path(path).parent_path().string());
}

}  // namespace phishnet
