#include "phishnet/features.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <unordered_set>

#include "phishnet/errors.hpp"
#include "phishnet/html.hpp"
#include "phishnet/url.hpp"
#include "punycode.hpp"
#include "text_match.hpp"

namespace phishnet {

namespace {

using detail::contains_phrase;
using detail::strip_spaces;
using V = IndicatorValue;

// x < lo -> Legitimate, lo <= x <= hi -> Doubtful, x > hi -> Phishy.
template <typename T>
V band_lower_open(T x, T lo, T hi) {
  if (x < lo) return V::Legitimate;
  if (x <= hi) return V::Doubtful;
  return V::Phishy;
}

// x <= lo -> Legitimate, lo < x <= hi -> Doubtful, x > hi -> Phishy.
template <typename T>
V band_lower_closed(T x, T lo, T hi) {
  if (x <= lo) return V::Legitimate;
  if (x <= hi) return V::Doubtful;
  return V::Phishy;
}

std::size_t count_code_points(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::size_t count_percent_escapes(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 2 < s.size(); ++i) {
    if (s[i] == '%' && std::isxdigit(static_cast<unsigned char>(s[i + 1])) &&
        std::isxdigit(static_cast<unsigned char>(s[i + 2]))) {
      ++n;
      i += 2;
    }
  }
  return n;
}

Url require_url(std::string_view url, std::string_view indicator) {
  auto parsed = parse_url(url);
  if (!parsed) throw ExtractionError(std::string(indicator), std::string(url), "malformed URL");
  return *std::move(parsed);
}

// Shared, lazily-free view of the evidence one record offers.
class Evidence {
 public:
  Evidence(const WebsiteRecord& record, const ExtractionConfig& cfg, Url url)
      : record(record), cfg(cfg), url(std::move(url)) {
    ip_host = is_ip_literal(this->url.host);
    site = ip_host ? this->url.host : cfg.suffixes().registered_domain(this->url.host);
    if (record.page_source) doc = parse_html(*record.page_source);
  }

  const WebsiteRecord& record;
  const ExtractionConfig& cfg;
  Url url;
  bool ip_host = false;
  std::string site;  // registered domain of the page host
  std::optional<HtmlDocument> doc;

  std::string site_of(const std::string& host) const {
    return is_ip_literal(host) ? host : cfg.suffixes().registered_domain(host);
  }
  bool is_external(const std::string& host) const { return site_of(host) != site; }

  // Host labels without the public suffix ("login.sbi-secure" for
  // "login.sbi-secure.co.uk").
  std::string host_without_suffix() const {
    const std::string suffix = cfg.suffixes().public_suffix(url.host);
    if (suffix.size() >= url.host.size()) return url.host;
    return url.host.substr(0, url.host.size() - suffix.size() - 1);
  }

  // Registered-domain label ("sbionline" for "www.sbionline.com").
  std::string site_label() const {
    const std::string suffix = cfg.suffixes().public_suffix(site);
    if (suffix.size() >= site.size()) return site;
    return site.substr(0, site.size() - suffix.size() - 1);
  }

  bool is_brand_domain() const {
    const std::string label = site_label();
    return std::find(cfg.brand_tokens.begin(), cfg.brand_tokens.end(), label) != cfg.brand_tokens.end();
  }

  // Lowercased lure text and visible page text; nullopt when neither exists.
  std::optional<std::string> social_text() const {
    if (!record.lure_text && !doc) return std::nullopt;
    std::string text;
    if (record.lure_text) text += to_lower(*record.lure_text);
    if (doc) {
      text += '\n';
      text += to_lower(doc->title);
      text += '\n';
      text += to_lower(doc->visible_text);
    }
    return text;
  }

  // Inline scripts, event-handler attributes and javascript: hrefs, lowercased
  // with whitespace removed.
  std::vector<std::string> script_snippets() const {
    std::vector<std::string> out;
    if (!doc) return out;
    for (const auto& s : doc->scripts) out.push_back(strip_spaces(to_lower(s)));
    for (const auto& tag : doc->tags) {
      for (const auto& [name, value] : tag.attributes) {
        if (name.size() > 2 && name.rfind("on", 0) == 0) {
          out.push_back(strip_spaces(to_lower(value)));
        } else if ((name == "href" || name == "src") && reference_scheme(value) == "javascript") {
          out.push_back(strip_spaces(to_lower(value)));
        }
      }
    }
    return out;
  }
};

V missing(const Evidence& ev) { return ev.cfg.missing_evidence_value; }

V rule_ip(const Evidence& ev) { return ev.ip_host ? V::Phishy : V::Legitimate; }

V rule_request_url(const Evidence& ev) {
  if (!ev.doc) return missing(ev);
  std::size_t total = 0;
  std::size_t external = 0;
  for (const auto& tag : ev.doc->tags) {
    if (tag.closing) continue;
    std::optional<std::string> ref;
    if (tag.name == "img" || tag.name == "script") {
      ref = tag.attr("src");
    } else if (tag.name == "link") {
      const std::string rel = to_lower(tag.attr("rel").value_or(""));
      if (rel.find("stylesheet") != std::string::npos) ref = tag.attr("href");
    }
    if (!ref) continue;
    const auto host = resolve_host(ev.url, *ref);
    if (!host) continue;
    ++total;
    if (ev.is_external(*host)) ++external;
  }
  if (total == 0) return V::Legitimate;
  const double r = static_cast<double>(external) / static_cast<double>(total);
  const auto& b = ev.cfg.external_resource_ratio_thresholds;
  return band_lower_open(r, b.lo, b.hi);
}

V rule_anchor(const Evidence& ev) {
  if (!ev.doc) return missing(ev);
  std::size_t total = 0;
  std::size_t bad = 0;
  for (const auto& a : ev.doc->anchors) {
    if (!a.href) continue;
    ++total;
    const std::string_view href = trim(*a.href);
    if (!href.empty() && href.front() == '#') {
      ++bad;
      continue;
    }
    const std::string scheme = reference_scheme(href);
    if (scheme == "javascript" || scheme == "vbscript") {
      ++bad;
      continue;
    }
    const auto host = resolve_host(ev.url, href);
    if (host && ev.is_external(*host)) ++bad;
  }
  if (total == 0) return V::Legitimate;
  const double r = static_cast<double>(bad) / static_cast<double>(total);
  const auto& b = ev.cfg.external_anchor_ratio_thresholds;
  return band_lower_open(r, b.lo, b.hi);
}

V rule_dns(const Evidence& ev) {
  const auto& dns = ev.record.dns_evidence;
  if (!dns) return missing(ev);
  if (!dns->resolvable) return V::Phishy;
  if (!dns->domain_age_days) return missing(ev);
  return *dns->domain_age_days < ev.cfg.young_domain_days ? V::Doubtful : V::Legitimate;
}

V rule_abnormal_url(const Evidence& ev) {
  if (!ev.doc) return missing(ev);
  const std::string title = to_lower(ev.doc->title);
  std::vector<std::string> claims;
  for (const auto& t : ev.cfg.brand_tokens) {
    if (contains_phrase(title, t)) claims.push_back(t);
  }
  if (claims.empty()) return V::Legitimate;
  const std::string label = ev.site_label();
  if (ev.is_brand_domain() || title.find(label) != std::string::npos) return V::Legitimate;
  for (const auto& t : claims) {
    if (label == t) return V::Legitimate;
  }
  for (const auto& t : claims) {
    if (label.find(t) != std::string::npos || t.find(label) != std::string::npos) return V::Doubtful;
  }
  return V::Phishy;
}

V rule_ssl(const WebsiteRecord& record, const Url& url) {
  if (url.scheme != "https") return V::Phishy;
  const auto& cert = record.cert_evidence;
  if (cert && cert->valid && !cert->self_signed) return V::Legitimate;
  return V::Doubtful;
}

V rule_ca(const Evidence& ev) {
  const auto& cert = ev.record.cert_evidence;
  if (!cert) return missing(ev);
  if (cert->self_signed) return V::Phishy;
  const std::string issuer = to_lower(cert->issuer);
  for (const auto& ca : ev.cfg.trusted_ca_names) {
    if (!ca.empty() && issuer.find(ca) != std::string::npos) return V::Legitimate;
  }
  return V::Doubtful;
}

bool domain_matches(std::string_view host, std::string domain) {
  while (!domain.empty() && domain.front() == '.') domain.erase(0, 1);
  if (domain.empty()) return false;
  if (host == domain) return true;
  return host.size() > domain.size() && host.substr(host.size() - domain.size()) == domain &&
         host[host.size() - domain.size() - 1] == '.';
}

V rule_cookie(const Evidence& ev) {
  const auto& headers = ev.record.response_headers;
  if (!headers) return missing(ev);
  for (const auto& [name, value] : *headers) {
    if (to_lower(name) != "set-cookie") continue;
    const std::string v = to_lower(value);
    std::size_t pos = 0;
    while ((pos = v.find(';', pos)) != std::string::npos) {
      ++pos;
      std::string_view attr = trim(std::string_view(v).substr(pos, v.find(';', pos) - pos));
      if (attr.rfind("domain", 0) != 0) continue;
      attr.remove_prefix(6);
      attr = trim(attr);
      if (attr.empty() || attr.front() != '=') continue;
      attr.remove_prefix(1);
      if (!domain_matches(ev.url.host, std::string(trim(attr)))) return V::Phishy;
    }
  }
  return V::Legitimate;
}

bool cn_matches(std::string_view host, std::string_view cn) {
  if (cn == host) return true;
  if (cn.rfind("*.", 0) == 0) {
    const auto dot = host.find('.');
    return dot != std::string_view::npos && host.substr(dot + 1) == cn.substr(2);
  }
  return false;
}

V rule_dn(const Evidence& ev) {
  const auto& cert = ev.record.cert_evidence;
  if (!cert) return missing(ev);
  const std::string cn = to_lower(trim(cert->subject_common_name));
  if (cn.empty()) return V::Phishy;
  if (cn_matches(ev.url.host, cn)) return V::Legitimate;
  const std::string cn_host = cn.rfind("*.", 0) == 0 ? cn.substr(2) : cn;
  return ev.site_of(cn_host) == ev.site ? V::Doubtful : V::Phishy;
}

std::size_t count_occurrences(std::string_view text, std::string_view needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string_view::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

V rule_redirects(const Evidence& ev) {
  if (!ev.record.redirect_chain && !ev.doc) return missing(ev);
  std::size_t count = 0;
  if (ev.record.redirect_chain && !ev.record.redirect_chain->empty()) {
    count += ev.record.redirect_chain->size() - 1;
  }
  if (ev.doc) {
    for (const auto& tag : ev.doc->tags) {
      if (!tag.closing && tag.name == "meta" &&
          to_lower(tag.attr("http-equiv").value_or("")) == "refresh") {
        ++count;
      }
    }
    for (const auto& script : ev.doc->scripts) {
      const std::string s = strip_spaces(to_lower(script));
      for (std::string_view p : {"location.href=", "location.replace(", "location.assign(",
                                 "window.location=", "document.location=", "top.location="}) {
        count += count_occurrences(s, p);
      }
    }
  }
  const auto& b = ev.cfg.redirect_count_thresholds;
  return band_lower_closed(static_cast<long>(count), static_cast<long>(b.lo), static_cast<long>(b.hi));
}

V rule_straddling(const Evidence& ev) {
  if (!ev.doc) return missing(ev);
  bool external_frame = false;
  for (const auto& tag : ev.doc->tags) {
    if (tag.closing || (tag.name != "iframe" && tag.name != "frame")) continue;
    const auto src = tag.attr("src");
    if (!src) continue;
    const auto host = resolve_host(ev.url, *src);
    if (host && ev.is_external(*host)) external_frame = true;
  }
  if (!external_frame) return V::Legitimate;
  for (const auto& f : ev.doc->forms) {
    if (f.has_input("password")) return V::Phishy;
  }
  return V::Doubtful;
}

// Parses anchor text that reads like a URL ("www.bank.com", "https://...").
std::optional<Url> url_like_text(std::string_view text) {
  text = trim(text);
  if (text.empty() || text.find(' ') != std::string_view::npos) return std::nullopt;
  const std::string lower = to_lower(text);
  if (lower.rfind("http://", 0) == 0 || lower.rfind("https://", 0) == 0) return parse_url(lower);
  const auto host_end = lower.find_first_of("/?#");
  const std::string_view host = std::string_view(lower).substr(0, host_end);
  const auto last_dot = host.rfind('.');
  if (last_dot == std::string_view::npos || last_dot == 0 || last_dot + 2 >= host.size() + 1) {
    return std::nullopt;
  }
  for (char c : host) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-') return std::nullopt;
  }
  const std::string_view tld = host.substr(last_dot + 1);
  if (tld.size() < 2 || !std::all_of(tld.begin(), tld.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); })) {
    return std::nullopt;
  }
  auto u = parse_url("http://" + lower);
  if (u) u->scheme.clear();  // no scheme was shown
  return u;
}

std::string strip_www(std::string host) {
  if (host.rfind("www.", 0) == 0) host.erase(0, 4);
  return host;
}

V rule_pharming(const Evidence& ev) {
  if (!ev.doc) return missing(ev);
  V result = V::Legitimate;
  for (const auto& a : ev.doc->anchors) {
    if (!a.href) continue;
    const auto shown = url_like_text(a.text);
    if (!shown) continue;
    const auto host = resolve_host(ev.url, *a.href);
    if (!host) continue;
    if (strip_www(shown->host) != strip_www(*host)) return V::Phishy;
    const std::string href_scheme = reference_scheme(*a.href);
    if (!shown->scheme.empty() && !href_scheme.empty() && shown->scheme != href_scheme) {
      result = V::Doubtful;
    }
  }
  return result;
}

bool rewrites_status_or_link(std::string_view snippet) {
  return snippet.find("window.status") != std::string_view::npos ||
         snippet.find("status=") != std::string_view::npos ||
         snippet.find(".href=") != std::string_view::npos ||
         snippet.find("location=") != std::string_view::npos;
}

V rule_onmouseover(const Evidence& ev) {
  if (!ev.doc) return missing(ev);
  bool any = false;
  for (const auto& a : ev.doc->anchors) {
    if (!a.onmouseover) continue;
    any = true;
    if (rewrites_status_or_link(strip_spaces(to_lower(*a.onmouseover)))) return V::Phishy;
  }
  for (const auto& s : ev.doc->scripts) {
    const std::string code = strip_spaces(to_lower(s));
    if (code.find("onmouseover") != std::string::npos && code.find("window.status") != std::string::npos) {
      return V::Phishy;
    }
  }
  return any ? V::Doubtful : V::Legitimate;
}

V rule_sfh(const Evidence& ev) {
  if (!ev.doc) return missing(ev);
  bool external = false;
  for (const auto& f : ev.doc->forms) {
    if (!f.action) continue;  // no attribute: posts back to the page itself
    const std::string action = to_lower(trim(*f.action));
    if (action.empty() || action == "about:blank") return V::Phishy;
    const auto host = resolve_host(ev.url, action);
    if (host && ev.is_external(*host)) external = true;
  }
  return external ? V::Doubtful : V::Legitimate;
}

std::vector<std::string> alpha_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (cur.size() >= 3) out.push_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (c == '\'' && !cur.empty()) {
      continue;
    } else {
      flush();
    }
  }
  flush();
  return out;
}

// True when `w` is one insertion, deletion, substitution or adjacent
// transposition away from some word in `dict` of length >= 4.
bool near_miss(const std::string& w, const std::unordered_set<std::string>& dict) {
  auto hit = [&](const std::string& cand) { return cand.size() >= 4 && dict.count(cand) > 0; };
  std::string cand;
  for (std::size_t i = 0; i < w.size(); ++i) {
    cand = w;
    cand.erase(i, 1);
    if (hit(cand)) return true;
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    cand = w;
    std::swap(cand[i], cand[i + 1]);
    if (hit(cand)) return true;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    cand = w;
    for (char c = 'a'; c <= 'z'; ++c) {
      if (c == w[i]) continue;
      cand[i] = c;
      if (hit(cand)) return true;
    }
  }
  for (std::size_t i = 0; i <= w.size(); ++i) {
    for (char c = 'a'; c <= 'z'; ++c) {
      cand = w;
      cand.insert(cand.begin() + static_cast<std::ptrdiff_t>(i), c);
      if (hit(cand)) return true;
    }
  }
  return false;
}

V rule_spelling(const Evidence& ev) {
  const auto text = ev.social_text();
  if (!text || ev.cfg.dictionary.empty()) return missing(ev);
  const auto tokens = alpha_tokens(*text);
  if (tokens.empty()) return missing(ev);
  const std::unordered_set<std::string> dict(ev.cfg.dictionary.begin(), ev.cfg.dictionary.end());
  std::size_t misspelled = 0;
  for (const auto& t : tokens) {
    if (!dict.count(t) && near_miss(t, dict)) ++misspelled;
  }
  const double r = static_cast<double>(misspelled) / static_cast<double>(tokens.size());
  const auto& b = ev.cfg.misspelling_ratio_thresholds;
  return band_lower_closed(r, b.lo, b.hi);
}

V rule_copying(const Evidence& ev) {
  if (!ev.doc) return missing(ev);
  if (ev.is_brand_domain()) return V::Legitimate;
  const std::string title = to_lower(ev.doc->title);
  const std::string body = to_lower(ev.doc->visible_text);
  bool in_body = false;
  for (const auto& t : ev.cfg.brand_tokens) {
    if (contains_phrase(title, t)) return V::Phishy;
    if (contains_phrase(body, t)) in_body = true;
  }
  return in_body ? V::Doubtful : V::Legitimate;
}

V rule_forms_submit(const Evidence& ev) {
  if (!ev.doc) return missing(ev);
  bool credential_form = false;
  for (const auto& f : ev.doc->forms) {
    if (f.has_input("password")) {
      const std::string action = f.action ? std::string(trim(*f.action)) : std::string();
      std::string scheme = action.empty() ? ev.url.scheme : reference_scheme(action);
      if (scheme.empty()) scheme = ev.url.scheme;
      if (scheme == "http") return V::Phishy;
      const auto host = resolve_host(ev.url, action);
      if (host && ev.is_external(*host)) return V::Phishy;
    }
    if ((f.has_input("text") || f.has_input("password") || f.has_input("email")) && f.has_submit) {
      credential_form = true;
    }
  }
  return credential_form ? V::Doubtful : V::Legitimate;
}

V rule_popups(const Evidence& ev) {
  if (!ev.doc) return missing(ev);
  bool any = false;
  for (const auto& s : ev.script_snippets()) {
    if (s.find("window.open(") == std::string::npos) continue;
    any = true;
    if (s.find("<input") != std::string::npos || s.find("prompt(") != std::string::npos) return V::Phishy;
  }
  return any ? V::Doubtful : V::Legitimate;
}

V rule_right_click(const Evidence& ev) {
  if (!ev.doc) return missing(ev);
  for (const auto& tag : ev.doc->tags) {
    if (const auto h = tag.attr("oncontextmenu")) {
      const std::string s = strip_spaces(to_lower(*h));
      if (s.find("returnfalse") != std::string::npos || s.find("preventdefault") != std::string::npos) {
        return V::Phishy;
      }
    }
  }
  bool alert_only = false;
  for (const auto& s : ev.script_snippets()) {
    const bool context = s.find("contextmenu") != std::string::npos;
    if (context && (s.find("returnfalse") != std::string::npos ||
                    s.find("preventdefault") != std::string::npos)) {
      return V::Phishy;
    }
    const bool right_button = s.find("button==2") != std::string::npos ||
                              s.find("button===2") != std::string::npos ||
                              s.find("which==3") != std::string::npos ||
                              s.find("which===3") != std::string::npos;
    if ((context || right_button) && s.find("alert(") != std::string::npos) alert_only = true;
  }
  return alert_only ? V::Doubtful : V::Legitimate;
}

std::string fold_ascii_lookalikes(std::string_view label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const char c = label[i];
    if (c == '0') {
      out += 'o';
    } else if (c == '1') {
      out += 'l';
    } else if (c == 'r' && i + 1 < label.size() && label[i + 1] == 'n') {
      out += 'm';
      ++i;
    } else {
      out += c;
    }
  }
  return out;
}

V rule_similar_char(const Evidence& ev) {
  if (ev.ip_host) return V::Legitimate;
  const std::string host = ev.host_without_suffix();
  bool punycode = false;
  std::size_t start = 0;
  while (start <= host.size()) {
    auto dot = host.find('.', start);
    if (dot == std::string::npos) dot = host.size();
    const std::string_view label = std::string_view(host).substr(start, dot - start);
    start = dot + 1;
    std::string folded;
    if (label.rfind("xn--", 0) == 0) {
      punycode = true;
      const auto decoded = detail::punycode_decode(label.substr(4));
      if (!decoded) continue;
      folded = detail::fold_confusables(*decoded);
    } else {
      folded = fold_ascii_lookalikes(label);
      if (folded == label) continue;
    }
    for (const auto& t : ev.cfg.brand_tokens) {
      if (folded.find(t) != std::string::npos && label.find(t) == std::string_view::npos) return V::Phishy;
    }
  }
  return punycode ? V::Doubtful : V::Legitimate;
}

V prefix_suffix_rule(const Url& url, const ExtractionConfig& cfg) {
  if (is_ip_literal(url.host)) return V::Legitimate;
  const std::string suffix = cfg.suffixes().public_suffix(url.host);
  const std::string labels =
      suffix.size() >= url.host.size() ? url.host : url.host.substr(0, url.host.size() - suffix.size() - 1);
  if (labels.find('-') == std::string::npos) return V::Legitimate;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != '-') continue;
    const std::string_view left = std::string_view(labels).substr(0, i);
    const std::string_view right = std::string_view(labels).substr(i + 1);
    for (const auto& t : cfg.brand_tokens) {
      if (t.empty()) continue;
      const bool left_adj = left.size() >= t.size() && left.substr(left.size() - t.size()) == t;
      const bool right_adj = right.substr(0, t.size()) == t;
      if (left_adj || right_adj) return V::Phishy;
    }
  }
  return V::Doubtful;
}

V hex_rule(const Url& url, const ExtractionConfig& cfg) {
  if (count_percent_escapes(url.host) > 0) return V::Phishy;
  const std::size_t n = count_percent_escapes(url.path) + count_percent_escapes(url.query);
  return n > static_cast<std::size_t>(cfg.hex_escape_path_threshold) ? V::Doubtful : V::Legitimate;
}

V rule_emphasis(const Evidence& ev) {
  const auto text = ev.social_text();
  if (!text) return missing(ev);
  std::size_t hits = 0;
  for (const auto& k : ev.cfg.security_keywords) {
    if (contains_phrase(*text, k)) ++hits;
  }
  if (hits >= 3) return V::Phishy;
  return hits > 0 ? V::Doubtful : V::Legitimate;
}

constexpr std::string_view kSalutationWords[] = {"dear", "hello", "hi", "greetings", "good morning",
                                                 "good afternoon", "good evening"};

V salutation_rule(const WebsiteRecord& record, const ExtractionConfig& cfg) {
  if (!record.lure_text) return V::Legitimate;
  const std::string text = to_lower(*record.lure_text);
  for (const auto& s : cfg.generic_salutations) {
    if (contains_phrase(text, s)) return V::Phishy;
  }
  for (auto w : kSalutationWords) {
    if (contains_phrase(text, w)) return V::Legitimate;
  }
  return V::Doubtful;
}

V rule_buying_time(const Evidence& ev) {
  const auto text = ev.social_text();
  if (!text) return missing(ev);
  for (const auto& p : ev.cfg.urgency_phrases) {
    if (contains_phrase(*text, p)) return V::Phishy;
  }
  for (const auto& p : ev.cfg.mild_urgency_phrases) {
    if (contains_phrase(*text, p)) return V::Doubtful;
  }
  return V::Legitimate;
}

V dispatch(Indicator id, const Evidence& ev) {
  switch (id) {
    case Indicator::UsingIpAddress: return rule_ip(ev);
    case Indicator::AbnormalRequestUrl: return rule_request_url(ev);
    case Indicator::AbnormalUrlOfAnchor: return rule_anchor(ev);
    case Indicator::AbnormalDnsRecord: return rule_dns(ev);
    case Indicator::AbnormalUrl: return rule_abnormal_url(ev);
    case Indicator::SslCertificate: return rule_ssl(ev.record, ev.url);
    case Indicator::CertificateAuthority: return rule_ca(ev);
    case Indicator::AbnormalCookie: return rule_cookie(ev);
    case Indicator::DistinguishedNamesCertificate: return rule_dn(ev);
    case Indicator::RedirectPages: return rule_redirects(ev);
    case Indicator::StraddlingAttack: return rule_straddling(ev);
    case Indicator::PharmingAttack: return rule_pharming(ev);
    case Indicator::OnmouseoverHideLink: return rule_onmouseover(ev);
    case Indicator::ServerFormHandler: return rule_sfh(ev);
    case Indicator::SpellingErrors: return rule_spelling(ev);
    case Indicator::CopyingWebsite: return rule_copying(ev);
    case Indicator::FormsWithSubmit: return rule_forms_submit(ev);
    case Indicator::PopupWindows: return rule_popups(ev);
    case Indicator::DisablingRightClick: return rule_right_click(ev);
    case Indicator::LongUrlAddress: return url_length_indicator(ev.record.url, ev.cfg);
    case Indicator::ReplacingSimilarChar: return rule_similar_char(ev);
    case Indicator::PrefixSuffix: return prefix_suffix_rule(ev.url, ev.cfg);
    case Indicator::AtSymbol: return at_symbol_indicator(ev.record.url);
    case Indicator::HexCharCodes: return hex_rule(ev.url, ev.cfg);
    case Indicator::EmphasisOnSecurity: return rule_emphasis(ev);
    case Indicator::GenericSalutation: return salutation_rule(ev.record, ev.cfg);
    case Indicator::BuyingTime: return rule_buying_time(ev);
  }
  throw ConfigError("unknown indicator id " + std::to_string(static_cast<int>(id)));
}

bool valid_indicator(Indicator id) {
  const int v = static_cast<int>(id);
  return v >= 0 && v < static_cast<int>(kIndicatorCount);
}

}  // namespace

std::array<double, kIndicatorCount> FeatureVector::encode() const {
  std::array<double, kIndicatorCount> out{};
  for (std::size_t i = 0; i < kIndicatorCount; ++i) out[i] = encode_value(values[i]);
  return out;
}

IndicatorValue ip_address_indicator(std::string_view url) {
  return is_ip_literal(require_url(url, "using_ip_address").host) ? V::Phishy : V::Legitimate;
}

IndicatorValue url_length_indicator(std::string_view url, const ExtractionConfig& cfg) {
  const auto n = static_cast<long>(count_code_points(url));
  return band_lower_open(n, static_cast<long>(cfg.url_length_thresholds.lo),
                         static_cast<long>(cfg.url_length_thresholds.hi));
}

IndicatorValue at_symbol_indicator(std::string_view url) {
  return url.find('@') != std::string_view::npos ? V::Phishy : V::Legitimate;
}

IndicatorValue prefix_suffix_indicator(std::string_view url, const ExtractionConfig& cfg) {
  return prefix_suffix_rule(require_url(url, "prefix_suffix"), cfg);
}

IndicatorValue hex_char_indicator(std::string_view url, const ExtractionConfig& cfg) {
  if (auto parsed = parse_url(url)) return hex_rule(*parsed, cfg);
  // Not an absolute URL: judge the whole string as path text.
  return count_percent_escapes(url) > static_cast<std::size_t>(cfg.hex_escape_path_threshold)
             ? V::Doubtful
             : V::Legitimate;
}

IndicatorValue anchor_url_indicator(const WebsiteRecord& record, const ExtractionConfig& cfg) {
  if (!record.page_source) return cfg.missing_evidence_value;
  return rule_anchor(Evidence(record, cfg, require_url(record.url, "abnormal_url_of_anchor")));
}

IndicatorValue sfh_indicator(const WebsiteRecord& record, const ExtractionConfig& cfg) {
  if (!record.page_source) return cfg.missing_evidence_value;
  return rule_sfh(Evidence(record, cfg, require_url(record.url, "server_form_handler")));
}

IndicatorValue ssl_indicator(const WebsiteRecord& record, const ExtractionConfig&) {
  return rule_ssl(record, require_url(record.url, "ssl_certificate"));
}

IndicatorValue salutation_indicator(const WebsiteRecord& record, const ExtractionConfig& cfg) {
  return salutation_rule(record, cfg);
}

IndicatorValue evaluate_indicator(Indicator id, const WebsiteRecord& record,
                                  const ExtractionConfig& cfg) {
  if (!valid_indicator(id)) {
    throw ConfigError("unknown indicator id " + std::to_string(static_cast<int>(id)));
  }
  const auto name = indicator_id(id).name;
  return dispatch(id, Evidence(record, cfg, require_url(record.url, name)));
}

IndicatorValue evaluate_indicator(std::string_view name, const WebsiteRecord& record,
                                  const ExtractionConfig& cfg) {
  const auto id = find_indicator(name);
  if (!id) throw ConfigError("unknown indicator '" + std::string(name) + "'");
  return evaluate_indicator(id->indicator, record, cfg);
}

FeatureVector extract_all(const WebsiteRecord& record, const ExtractionConfig& cfg) {
  const Evidence ev(record, cfg, require_url(record.url, "extract_all"));
  FeatureVector fv;
  for (const auto& id : all_indicators()) fv.values[id.slot()] = dispatch(id.indicator, ev);
  return fv;
}

}  // namespace phishnet
