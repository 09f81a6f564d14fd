#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phishnet {

using Timestamp = std::chrono::sys_seconds;

// Formats as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_timestamp(Timestamp t);

// Accepts "YYYY-MM-DD", "YYYY-MM-DD[T ]HH:MM:SS[.fff][Z|+HH:MM|-HH:MM|+HHMM]".
// Fractional seconds are truncated. Returns nullopt on anything else.
std::optional<Timestamp> parse_timestamp(std::string_view text);

enum class Label { Legit, Phish };

std::string_view to_string(Label l) noexcept;
std::optional<Label> parse_label(std::string_view s) noexcept;

struct CertEvidence {
  std::string issuer;
  std::string subject_common_name;
  bool valid = false;
  bool self_signed = false;

  bool operator==(const CertEvidence&) const = default;
};

struct DnsEvidence {
  bool resolvable = true;
  std::optional<double> domain_age_days;

  bool operator==(const DnsEvidence&) const = default;
};

using Header = std::pair<std::string, std::string>;

// One candidate site as collected from an archive, a list, or a live fetch.
struct WebsiteRecord {
  std::string url;
  std::optional<std::string> page_source;
  std::optional<std::vector<Header>> response_headers;
  std::optional<std::vector<std::string>> redirect_chain;
  std::optional<CertEvidence> cert_evidence;
  std::optional<DnsEvidence> dns_evidence;
  std::optional<std::string> lure_text;
  Timestamp observed_at{};
  std::optional<Label> label;

  bool operator==(const WebsiteRecord&) const = default;
};

// Throws ConfigError when the url is not absolute or the redirect chain does
// not start with it.
void validate(const WebsiteRecord& record);

}  // namespace phishnet
