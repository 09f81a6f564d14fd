#include "phishnet/url.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <vector>

namespace phishnet {

namespace {

bool is_scheme_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
}

// Parses one IPv4 component the way inet_aton does: 0x.. hex, 0.. octal,
// otherwise decimal.
std::optional<std::uint64_t> parse_ip_part(std::string_view p) {
  if (p.empty()) return std::nullopt;
  int base = 10;
  if (p.size() > 2 && p[0] == '0' && (p[1] == 'x' || p[1] == 'X')) {
    base = 16;
    p.remove_prefix(2);
  } else if (p.size() > 1 && p[0] == '0') {
    base = 8;
    p.remove_prefix(1);
  }
  if (p.size() > 12) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : p) {
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (base == 16 && std::isxdigit(static_cast<unsigned char>(c))) {
      digit = std::tolower(static_cast<unsigned char>(c)) - 'a' + 10;
    } else {
      return std::nullopt;
    }
    if (digit >= base) return std::nullopt;
    v = v * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(digit);
  }
  return v;
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string reference_scheme(std::string_view ref) {
  ref = trim(ref);
  const auto colon = ref.find(':');
  if (colon == std::string_view::npos || colon == 0) return {};
  if (!std::isalpha(static_cast<unsigned char>(ref[0]))) return {};
  for (std::size_t i = 0; i < colon; ++i) {
    if (!is_scheme_char(ref[i])) return {};
  }
  return to_lower(ref.substr(0, colon));
}

std::optional<Url> parse_url(std::string_view text) {
  text = trim(text);
  Url url;
  url.scheme = reference_scheme(text);
  if (url.scheme.empty()) return std::nullopt;
  std::string_view rest = text.substr(url.scheme.size() + 1);
  if (rest.substr(0, 2) != "//") return std::nullopt;
  rest.remove_prefix(2);

  const auto auth_end = rest.find_first_of("/?#");
  std::string_view authority = rest.substr(0, auth_end);
  std::string_view tail = auth_end == std::string_view::npos ? std::string_view{} : rest.substr(auth_end);

  if (const auto at = authority.rfind('@'); at != std::string_view::npos) {
    url.userinfo = std::string(authority.substr(0, at));
    url.has_userinfo = true;
    authority.remove_prefix(at + 1);
  }
  std::string_view host = authority;
  if (!host.empty() && host.front() == '[') {
    const auto close = host.find(']');
    if (close == std::string_view::npos) return std::nullopt;
    if (close + 1 < host.size()) {
      if (host[close + 1] != ':') return std::nullopt;
      url.port = std::string(host.substr(close + 2));
    }
    host = host.substr(0, close + 1);
  } else if (const auto colon = host.rfind(':'); colon != std::string_view::npos) {
    url.port = std::string(host.substr(colon + 1));
    host = host.substr(0, colon);
  }
  for (char c : url.port) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  if (host.empty()) return std::nullopt;
  for (char c : host) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isspace(uc) || c == '\\' || c == '<' || c == '>' || c == '"' || uc < 0x20) {
      return std::nullopt;
    }
  }
  url.host = to_lower(host);

  const auto frag = tail.find('#');
  if (frag != std::string_view::npos) {
    url.fragment = std::string(tail.substr(frag + 1));
    tail = tail.substr(0, frag);
  }
  const auto q = tail.find('?');
  if (q != std::string_view::npos) {
    url.query = std::string(tail.substr(q + 1));
    tail = tail.substr(0, q);
  }
  url.path = std::string(tail);
  return url;
}

bool is_ip_literal(std::string_view host) {
  if (host.size() >= 2 && host.front() == '[' && host.back() == ']') return true;
  if (host.empty()) return false;
  if (host.back() == '.') host.remove_suffix(1);
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto dot = host.find('.', start);
    parts.push_back(host.substr(start, dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  if (parts.size() > 4) return false;
  std::vector<std::uint64_t> values;
  for (auto p : parts) {
    auto v = parse_ip_part(p);
    if (!v) return false;
    values.push_back(*v);
  }
  // Leading parts are single octets; the last one fills the remaining bytes.
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i] > 255) return false;
  }
  const std::size_t rest_bytes = 4 - (values.size() - 1);
  return values.back() < (std::uint64_t{1} << (8 * rest_bytes));
}

std::optional<std::string> resolve_host(const Url& base, std::string_view ref) {
  ref = trim(ref);
  if (ref.empty()) return base.host;
  if (ref.front() == '#') return std::nullopt;
  if (ref.substr(0, 2) == "//") {
    auto u = parse_url(base.scheme + ":" + std::string(ref));
    if (!u) return std::nullopt;
    return u->host;
  }
  const std::string scheme = reference_scheme(ref);
  if (scheme.empty()) return base.host;
  auto u = parse_url(ref);
  if (!u) return std::nullopt;
  return u->host;
}

}  // namespace phishnet
