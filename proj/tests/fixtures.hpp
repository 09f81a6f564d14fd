#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "phishnet/website_record.hpp"

namespace fixtures {

using phishnet::CertEvidence;
using phishnet::DnsEvidence;
using phishnet::Label;
using phishnet::WebsiteRecord;

inline phishnet::Timestamp at(int y, unsigned m, unsigned d, int hh = 0) {
  using namespace std::chrono;
  return sys_days{year{y} / month{m} / day{d}} + hours{hh};
}

inline WebsiteRecord url_only(std::string url, Label label = Label::Phish) {
  WebsiteRecord r;
  r.url = std::move(url);
  r.observed_at = at(2024, 5, 1);
  r.label = label;
  return r;
}

inline std::string page(const std::string& title, const std::string& body) {
  return "<!DOCTYPE html><html><head><title>" + title + "</title></head><body>" + body +
         "</body></html>";
}

// Every rule takes its clean branch.
inline WebsiteRecord benign() {
  WebsiteRecord r;
  r.url = "https://www.example.org/library";
  r.page_source = page("City Library",
                       "<p>Welcome to the city library. Opening hours are listed below.</p>");
  r.response_headers = std::vector<phishnet::Header>{
      {"Content-Type", "text/html"}, {"Set-Cookie", "sid=1; Domain=example.org; Path=/"}};
  r.redirect_chain = std::vector<std::string>{r.url};
  r.cert_evidence = CertEvidence{"DigiCert Inc", "www.example.org", true, false};
  r.dns_evidence = DnsEvidence{true, 4000.0};
  r.observed_at = at(2024, 5, 1);
  r.label = Label::Legit;
  return r;
}

inline WebsiteRecord sbi_phish() {
  WebsiteRecord r;
  r.url = "http://203.0.113.7/@sbi-login";
  r.page_source = page("State Bank Login",
                       "<form action=\"\" method=\"post\"><input type=\"text\" name=\"user\">"
                       "<input type=\"password\" name=\"pw\"><input type=\"submit\"></form>");
  r.observed_at = at(2024, 5, 1);
  r.label = Label::Phish;
  return r;
}

struct Fixture {
  std::string name;
  WebsiteRecord record;
};

inline std::vector<Fixture> corpus() {
  std::vector<Fixture> out;
  out.push_back({"benign", benign()});
  out.push_back({"sbi_phish", sbi_phish()});
  out.push_back({"url_only_legit", url_only("https://www.onlinesbi.com", Label::Legit)});
  out.push_back({"ip_literal", url_only("http://125.98.3.123/fake.html")});
  out.push_back({"hex_ip", url_only("http://0x7f000001/login")});
  out.push_back({"userinfo_at", url_only("http://legit-bank.com@203.0.113.9/")});
  out.push_back({"brand_hyphen", url_only("http://sbi-secure.example.com")});
  out.push_back({"escaped_host", url_only("http://%77%77%77.example.com")});
  out.push_back({"long_url",
                 url_only("http://login.example.com/account/update/verify/session/abcdefghijklmnopqrstuvwxyz0123")});
  out.push_back({"punycode_brand", url_only("http://xn--pypal-4ve.com/signin")});
  out.push_back({"digit_lookalike", url_only("http://paypa1.com/")});

  {
    auto r = benign();
    r.url = "https://news.example.org/";
    r.redirect_chain = std::vector<std::string>{r.url};
    r.cert_evidence->subject_common_name = "news.example.org";
    r.page_source = page("News",
                         "<a href=\"https://a.example.net/\">x</a><a href=\"https://b.example.net/\">x</a>"
                         "<a href=\"#\">x</a><a href=\"javascript:void(0)\">x</a><a href=\"/local\">x</a>");
    out.push_back({"external_anchors", r});
  }
  {
    auto r = benign();
    r.page_source = page("Library", "<img src=\"https://cdn.example.net/a.png\"><img src=\"/b.png\">"
                                    "<script src=\"https://cdn.example.net/c.js\"></script>");
    out.push_back({"external_resources", r});
  }
  {
    auto r = benign();
    r.cert_evidence = CertEvidence{"Self", "www.example.org", false, true};
    out.push_back({"self_signed", r});
  }
  {
    auto r = benign();
    r.cert_evidence = CertEvidence{"DigiCert Inc", "mail.example.org", true, false};
    r.response_headers = std::vector<phishnet::Header>{{"Set-Cookie", "t=2; Domain=tracker.example.net"}};
    out.push_back({"cn_and_cookie_mismatch", r});
  }
  {
    auto r = benign();
    r.redirect_chain = std::vector<std::string>{r.url, "https://a.example.org/", "https://b.example.org/",
                                                "https://c.example.org/", "https://d.example.org/"};
    r.dns_evidence = DnsEvidence{true, 12.0};
    out.push_back({"redirects_young_domain", r});
  }
  {
    auto r = benign();
    r.page_source = page("Portal", "<iframe src=\"https://evil.example.net/frame\"></iframe>"
                                   "<form action=\"/login\"><input type=\"password\"></form>");
    out.push_back({"straddling", r});
  }
  {
    auto r = benign();
    r.page_source = page("Links", "<a href=\"http://evil.example.net/\" "
                                  "onmouseover=\"window.status='https://www.example.org'\">"
                                  "www.example.org</a>");
    out.push_back({"pharming_onmouseover", r});
  }
  {
    auto r = benign();
    r.page_source = page("PayPal", "<form action=\"https://collect.example.net/post\">"
                                   "<input type=\"password\"><input type=\"submit\"></form>");
    out.push_back({"copied_brand_external_form", r});
  }
  {
    auto r = benign();
    r.page_source = page("Offers", "<script>window.open('https://ads.example.net/');"
                                   "document.oncontextmenu=function(){return false;}</script>");
    out.push_back({"popup_right_click", r});
  }
  {
    auto r = url_only("https://secure.example.com/notice");
    r.lure_text = "Dear Customer, your account will be suspended. Verify your password and confirm "
                  "your security details immediately.";
    out.push_back({"lure_generic", r});
  }
  {
    auto r = url_only("https://secure.example.com/statement", Label::Legit);
    r.lure_text = "Your statement is ready.";
    out.push_back({"lure_plain", r});
  }
  {
    auto r = benign();
    r.page_source = page("Bank", "<p>Plese updte yuor acount detials nwo to continu.</p>");
    out.push_back({"misspelled", r});
  }
  {
    auto r = url_only("http://my-shop.example.com/cart", Label::Legit);
    r.dns_evidence = DnsEvidence{false, std::nullopt};
    out.push_back({"unresolvable_hyphen", r});
  }
  return out;
}

}  // namespace fixtures
