#include <doctest.h>

#include <string>

#include "phishnet/errors.hpp"
#include "phishnet/public_suffix.hpp"
#include "phishnet/url.hpp"
#include "phishnet/website_record.hpp"
#include "punycode.hpp"

using namespace phishnet;

TEST_CASE("parse_url") {
  const auto u = parse_url("HTTPS://user:pw@WWW.Example.COM:8443/a/b?x=1#frag");
  REQUIRE(u);
  CHECK(u->scheme == "https");
  CHECK(u->userinfo == "user:pw");
  CHECK(u->has_userinfo);
  CHECK(u->host == "www.example.com");
  CHECK(u->port == "8443");
  CHECK(u->path == "/a/b");
  CHECK(u->query == "x=1");
  CHECK(u->fragment == "frag");

  const auto v6 = parse_url("http://[2001:db8::1]:80/");
  REQUIRE(v6);
  CHECK(v6->host == "[2001:db8::1]");
  CHECK(v6->port == "80");

  // The last '@' ends the userinfo.
  const auto at = parse_url("http://a@b@203.0.113.9/");
  REQUIRE(at);
  CHECK(at->host == "203.0.113.9");

  // '@' in the path is not userinfo.
  const auto path_at = parse_url("http://203.0.113.7/@sbi-login");
  REQUIRE(path_at);
  CHECK(path_at->host == "203.0.113.7");
  CHECK_FALSE(path_at->has_userinfo);
  CHECK(path_at->path == "/@sbi-login");

  CHECK_FALSE(parse_url("not a url"));
  CHECK_FALSE(parse_url("http://"));
  CHECK_FALSE(parse_url("example.com/path"));
  CHECK_FALSE(parse_url("http://example.com:port/"));
  CHECK_FALSE(parse_url(""));
}

TEST_CASE("is_ip_literal") {
  for (const char* h : {"125.98.3.123", "0x7f000001", "2130706433", "0177.0.0.1", "127.1", "[::1]", "[2001:db8::1]"}) {
    INFO(h);
    CHECK(is_ip_literal(h));
  }
  for (const char* h : {"example.com", "1.2.3.4.example", "256.1.1.1.1", "0xzz", "", "1..2", "face.book"}) {
    INFO(h);
    CHECK_FALSE(is_ip_literal(h));
  }
}

TEST_CASE("resolve_host") {
  const auto base = *parse_url("https://www.example.com/dir/page.html");
  CHECK(resolve_host(base, "/x") == "www.example.com");
  CHECK(resolve_host(base, "other.html") == "www.example.com");
  CHECK(resolve_host(base, "") == "www.example.com");
  CHECK(resolve_host(base, "//cdn.example.net/a.js") == "cdn.example.net");
  CHECK(resolve_host(base, "HTTP://Evil.Example.NET/") == "evil.example.net");
  CHECK_FALSE(resolve_host(base, "#top"));
  CHECK_FALSE(resolve_host(base, "javascript:void(0)"));
  CHECK_FALSE(resolve_host(base, "mailto:a@b.com"));
  CHECK(reference_scheme("JavaScript:alert(1)") == "javascript");
  CHECK(reference_scheme("/relative") == "");
}

TEST_CASE("public suffix list") {
  const auto& psl = PublicSuffixList::bundled();
  CHECK(psl.size() > 100);
  CHECK(psl.registered_domain("www.example.com") == "example.com");
  CHECK(psl.registered_domain("a.b.example.co.uk") == "example.co.uk");
  CHECK(psl.registered_domain("user.github.io") == "user.github.io");
  CHECK(psl.registered_domain("com") == "com");
  CHECK(psl.registered_domain("localhost") == "localhost");
  CHECK(psl.public_suffix("www.example.co.uk") == "co.uk");
  CHECK(psl.public_suffix("foo.unknowntld") == "unknowntld");

  const auto custom = PublicSuffixList::parse(
      "// comment\n"
      "jp\n"
      "*.kawasaki.jp\n"
      "!city.kawasaki.jp\n"
      "uk\nco.uk\n");
  CHECK(custom.public_suffix("a.b.kawasaki.jp") == "b.kawasaki.jp");
  CHECK(custom.registered_domain("a.b.kawasaki.jp") == "a.b.kawasaki.jp");
  CHECK(custom.public_suffix("www.city.kawasaki.jp") == "kawasaki.jp");
  CHECK(custom.registered_domain("www.city.kawasaki.jp") == "city.kawasaki.jp");
  CHECK(custom.registered_domain("shop.example.co.uk") == "example.co.uk");
}

TEST_CASE("punycode decoding") {
  using detail::punycode_decode;
  CHECK(punycode_decode("mnchen-3ya") == std::u32string(U"münchen"));
  CHECK(punycode_decode("pypal-4ve") == std::u32string(U"pаypal"));
  CHECK(detail::fold_confusables(*punycode_decode("pypal-4ve")) == "paypal");
  CHECK(detail::fold_confusables(U"münchen") == "munchen");
  CHECK_FALSE(punycode_decode("\x7f\x7f-!!"));
}

TEST_CASE("timestamps") {
  using namespace std::chrono;
  const auto t = parse_timestamp("2024-05-01T12:34:56Z");
  REQUIRE(t);
  CHECK(format_timestamp(*t) == "2024-05-01T12:34:56Z");
  CHECK(parse_timestamp("2024-05-01") == sys_days{year{2024} / 5 / 1});
  CHECK(parse_timestamp("2024-05-01 12:34:56") == t);
  CHECK(parse_timestamp("2024-05-01T12:34:56.789Z") == t);
  CHECK(parse_timestamp("2024-05-01T14:34:56+02:00") == t);
  CHECK(parse_timestamp("2024-05-01T07:04:56-0530") == t);
  CHECK_FALSE(parse_timestamp("yesterday"));
  CHECK_FALSE(parse_timestamp("2024-13-01"));
  CHECK_FALSE(parse_timestamp("2024-02-30"));
  CHECK_FALSE(parse_timestamp("2024-05-01T25:00:00Z"));
  CHECK_FALSE(parse_timestamp(""));
  for (const auto& s : {"1970-01-01T00:00:00Z", "2000-02-29T23:59:59Z", "2038-01-19T03:14:08Z"}) {
    CHECK(format_timestamp(*parse_timestamp(s)) == s);
  }
}

TEST_CASE("labels and record validation") {
  CHECK(parse_label("phish") == Label::Phish);
  CHECK(parse_label("legit") == Label::Legit);
  CHECK_FALSE(parse_label("spam"));
  CHECK(to_string(Label::Phish) == "phish");

  WebsiteRecord r;
  r.url = "https://example.com/";
  CHECK_NOTHROW(validate(r));
  r.redirect_chain = std::vector<std::string>{"https://other.example/"};
  CHECK_THROWS_AS(validate(r), ConfigError);
  r.redirect_chain.reset();
  r.url = "relative/path";
  CHECK_THROWS_AS(validate(r), ConfigError);
}
