#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace phishnet {

// Ternary evidence value. Ordered: Legitimate < Doubtful < Phishy.
enum class IndicatorValue : int { Legitimate = 0, Doubtful = 1, Phishy = 2 };

constexpr double encode_value(IndicatorValue v) noexcept {
  switch (v) {
    case IndicatorValue::Legitimate:
      return 0.0;
    case IndicatorValue::Doubtful:
      return 0.5;
    case IndicatorValue::Phishy:
      return 1.0;
  }
  return 0.5;
}

std::string_view to_string(IndicatorValue v) noexcept;
std::optional<IndicatorValue> parse_indicator_value(std::string_view s) noexcept;

enum class Criterion : int {
  UrlDomainIdentity = 0,
  SecurityEncryption,
  SourceCodeJavaScript,
  PageStyleContents,
  WebAddressBar,
  SocialHumanFactor,
};

std::string_view to_string(Criterion c) noexcept;

// The 27 indicators in canonical order (criterion groups of 5/4/5/5/5/3).
enum class Indicator : int {
  UsingIpAddress = 0,
  AbnormalRequestUrl,
  AbnormalUrlOfAnchor,
  AbnormalDnsRecord,
  AbnormalUrl,

  SslCertificate,
  CertificateAuthority,
  AbnormalCookie,
  DistinguishedNamesCertificate,

  RedirectPages,
  StraddlingAttack,
  PharmingAttack,
  OnmouseoverHideLink,
  ServerFormHandler,

  SpellingErrors,
  CopyingWebsite,
  FormsWithSubmit,
  PopupWindows,
  DisablingRightClick,

  LongUrlAddress,
  ReplacingSimilarChar,
  PrefixSuffix,
  AtSymbol,
  HexCharCodes,

  EmphasisOnSecurity,
  GenericSalutation,
  BuyingTime,
};

inline constexpr std::size_t kIndicatorCount = 27;

struct IndicatorId {
  Indicator indicator;
  Criterion criterion;
  int index_within_criterion;  // 1-based
  std::string_view name;       // canonical snake_case

  constexpr std::size_t slot() const noexcept { return static_cast<std::size_t>(indicator); }
};

const std::array<IndicatorId, kIndicatorCount>& all_indicators() noexcept;
const IndicatorId& indicator_id(Indicator ind) noexcept;
std::optional<IndicatorId> find_indicator(std::string_view name) noexcept;

}  // namespace phishnet
