#include "phishnet/indicator.hpp"

namespace phishnet {

namespace {

using enum Indicator;
using enum Criterion;

constexpr std::array<IndicatorId, kIndicatorCount> kTable{{
    {UsingIpAddress, UrlDomainIdentity, 1, "using_ip_address"},
    {AbnormalRequestUrl, UrlDomainIdentity, 2, "abnormal_request_url"},
    {AbnormalUrlOfAnchor, UrlDomainIdentity, 3, "abnormal_url_of_anchor"},
    {AbnormalDnsRecord, UrlDomainIdentity, 4, "abnormal_dns_record"},
    {AbnormalUrl, UrlDomainIdentity, 5, "abnormal_url"},
    {SslCertificate, SecurityEncryption, 1, "ssl_certificate"},
    {CertificateAuthority, SecurityEncryption, 2, "certificate_authority"},
    {AbnormalCookie, SecurityEncryption, 3, "abnormal_cookie"},
    {DistinguishedNamesCertificate, SecurityEncryption, 4, "distinguished_names_certificate"},
    {RedirectPages, SourceCodeJavaScript, 1, "redirect_pages"},
    {StraddlingAttack, SourceCodeJavaScript, 2, "straddling_attack"},
    {PharmingAttack, SourceCodeJavaScript, 3, "pharming_attack"},
    {OnmouseoverHideLink, SourceCodeJavaScript, 4, "onmouseover_hide_link"},
    {ServerFormHandler, SourceCodeJavaScript, 5, "server_form_handler"},
    {SpellingErrors, PageStyleContents, 1, "spelling_errors"},
    {CopyingWebsite, PageStyleContents, 2, "copying_website"},
    {FormsWithSubmit, PageStyleContents, 3, "forms_with_submit"},
    {PopupWindows, PageStyleContents, 4, "popup_windows"},
    {DisablingRightClick, PageStyleContents, 5, "disabling_right_click"},
    {LongUrlAddress, WebAddressBar, 1, "long_url_address"},
    {ReplacingSimilarChar, WebAddressBar, 2, "replacing_similar_char"},
    {PrefixSuffix, WebAddressBar, 3, "prefix_suffix"},
    {AtSymbol, WebAddressBar, 4, "at_symbol"},
    {HexCharCodes, WebAddressBar, 5, "hex_char_codes"},
    {EmphasisOnSecurity, SocialHumanFactor, 1, "emphasis_on_security"},
    {GenericSalutation, SocialHumanFactor, 2, "generic_salutation"},
    {BuyingTime, SocialHumanFactor, 3, "buying_time"},
}};

}  // namespace

std::string_view to_string(IndicatorValue v) noexcept {
  switch (v) {
    case IndicatorValue::Legitimate:
      return "Legitimate";
    case IndicatorValue::Doubtful:
      return "Doubtful";
    case IndicatorValue::Phishy:
      return "Phishy";
  }
  return "?";
}

std::optional<IndicatorValue> parse_indicator_value(std::string_view s) noexcept {
  if (s == "Legitimate" || s == "legitimate") return IndicatorValue::Legitimate;
  if (s == "Doubtful" || s == "doubtful") return IndicatorValue::Doubtful;
  if (s == "Phishy" || s == "phishy") return IndicatorValue::Phishy;
  return std::nullopt;
}

std::string_view to_string(Criterion c) noexcept {
  switch (c) {
    case UrlDomainIdentity:
      return "URL & Domain Identity";
    case SecurityEncryption:
      return "Security & Encryption";
    case SourceCodeJavaScript:
      return "Source Code & JavaScript";
    case PageStyleContents:
      return "Page Style & Contents";
    case WebAddressBar:
      return "Web Address Bar";
    case SocialHumanFactor:
      return "Social Human Factor";
  }
  return "?";
}

const std::array<IndicatorId, kIndicatorCount>& all_indicators() noexcept { return kTable; }

const IndicatorId& indicator_id(Indicator ind) noexcept {
  return kTable[static_cast<std::size_t>(ind)];
}

std::optional<IndicatorId> find_indicator(std::string_view name) noexcept {
  for (const auto& id : kTable) {
    if (id.name == name) return id;
  }
  return std::nullopt;
}

}  // namespace phishnet
