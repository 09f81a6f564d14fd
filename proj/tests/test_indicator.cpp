#include <doctest.h>

#include <string>
#include <vector>

#include "phishnet/indicator.hpp"

using namespace phishnet;

TEST_CASE("ternary encoding") {
  CHECK(encode_value(IndicatorValue::Legitimate) == 0.0);
  CHECK(encode_value(IndicatorValue::Doubtful) == 0.5);
  CHECK(encode_value(IndicatorValue::Phishy) == 1.0);
  CHECK(encode_value(IndicatorValue::Legitimate) < encode_value(IndicatorValue::Doubtful));
  CHECK(encode_value(IndicatorValue::Doubtful) < encode_value(IndicatorValue::Phishy));
  CHECK(IndicatorValue::Legitimate < IndicatorValue::Doubtful);
  CHECK(IndicatorValue::Doubtful < IndicatorValue::Phishy);
  for (auto v : {IndicatorValue::Legitimate, IndicatorValue::Doubtful, IndicatorValue::Phishy}) {
    CHECK(parse_indicator_value(to_string(v)) == v);
  }
  CHECK_FALSE(parse_indicator_value("maybe"));
}

TEST_CASE("27 indicators in canonical order") {
  const std::vector<std::string> expected = {
      "using_ip_address",      "abnormal_request_url",  "abnormal_url_of_anchor",
      "abnormal_dns_record",   "abnormal_url",          "ssl_certificate",
      "certificate_authority", "abnormal_cookie",       "distinguished_names_certificate",
      "redirect_pages",        "straddling_attack",     "pharming_attack",
      "onmouseover_hide_link", "server_form_handler",   "spelling_errors",
      "copying_website",       "forms_with_submit",     "popup_windows",
      "disabling_right_click", "long_url_address",      "replacing_similar_char",
      "prefix_suffix",         "at_symbol",             "hex_char_codes",
      "emphasis_on_security",  "generic_salutation",    "buying_time"};
  const auto& all = all_indicators();
  REQUIRE(all.size() == 27);
  std::vector<int> per_criterion(6, 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(std::string(all[i].name) == expected[i]);
    CHECK(all[i].slot() == i);
    const int c = static_cast<int>(all[i].criterion);
    ++per_criterion[static_cast<std::size_t>(c)];
    CHECK(all[i].index_within_criterion == per_criterion[static_cast<std::size_t>(c)]);
    CHECK(find_indicator(all[i].name)->indicator == all[i].indicator);
  }
  CHECK(per_criterion == std::vector<int>{5, 4, 5, 5, 5, 3});
  CHECK_FALSE(find_indicator("not_an_indicator"));
}
