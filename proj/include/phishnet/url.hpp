#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace phishnet {

// Lexical decomposition of an absolute URL. No percent-decoding is applied;
// `host` is lowercased.
struct Url {
  std::string scheme;
  std::string userinfo;  // text before '@' in the authority, if any
  std::string host;
  std::string port;
  std::string path;
  std::string query;
  std::string fragment;
  bool has_userinfo = false;
};

// Returns nullopt unless the text has a scheme and a non-empty host.
std::optional<Url> parse_url(std::string_view text);

// Dotted-decimal (1-4 parts, octal/hex parts allowed), single hex or integer
// literal, or bracketed IPv6.
bool is_ip_literal(std::string_view host);

// Host a link reference points at, resolved against the page URL. nullopt for
// references that do not name a network location (javascript:, mailto:,
// data:, bare fragments).
std::optional<std::string> resolve_host(const Url& base, std::string_view ref);

// Scheme of a reference ("javascript" for "JavaScript:void(0)"), lowercased,
// or empty for relative references.
std::string reference_scheme(std::string_view ref);

std::string_view trim(std::string_view s);

std::string to_lower(std::string_view s);

}  // namespace phishnet
