#include "phishnet/public_suffix.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "phishnet/errors.hpp"
#include "phishnet/url.hpp"

namespace phishnet {

namespace detail {
extern const char* const kBundledPublicSuffixes;
}

namespace {

std::vector<std::string_view> split_labels(std::string_view host) {
  std::vector<std::string_view> labels;
  std::size_t start = 0;
  while (true) {
    const auto dot = host.find('.', start);
    labels.push_back(host.substr(start, dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return labels;
}

std::string join_from(const std::vector<std::string_view>& labels, std::size_t first) {
  std::string out;
  for (std::size_t i = first; i < labels.size(); ++i) {
    if (!out.empty()) out += '.';
    out += labels[i];
  }
  return out;
}

}  // namespace

PublicSuffixList PublicSuffixList::parse(std::string_view text) {
  PublicSuffixList psl;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty() || line.substr(0, 2) == "//") continue;
    // Rules end at the first whitespace.
    line = line.substr(0, line.find_first_of(" \t"));
    const std::string rule = to_lower(line);
    if (rule.rfind("!", 0) == 0) {
      psl.exceptions_.insert(rule.substr(1));
    } else if (rule.rfind("*.", 0) == 0) {
      psl.wildcards_.insert(rule.substr(2));
    } else {
      psl.rules_.insert(rule);
    }
  }
  return psl;
}

PublicSuffixList PublicSuffixList::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read public suffix file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const PublicSuffixList& PublicSuffixList::bundled() {
  static const PublicSuffixList list = parse(detail::kBundledPublicSuffixes);
  return list;
}

std::string PublicSuffixList::public_suffix(std::string_view host) const {
  std::string h = to_lower(host);
  while (!h.empty() && h.back() == '.') h.pop_back();
  const auto labels = split_labels(h);
  // Scan from the longest candidate; the first match is the longest rule.
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string candidate = join_from(labels, i);
    if (exceptions_.count(candidate)) return join_from(labels, i + 1);
    if (rules_.count(candidate)) return candidate;
    if (i + 1 < labels.size() && wildcards_.count(join_from(labels, i + 1))) return candidate;
  }
  return std::string(labels.back());
}

std::string PublicSuffixList::registered_domain(std::string_view host) const {
  std::string h = to_lower(host);
  while (!h.empty() && h.back() == '.') h.pop_back();
  const std::string suffix = public_suffix(h);
  if (suffix.size() >= h.size()) return h;
  // One label in front of the suffix.
  const std::string_view prefix = std::string_view(h).substr(0, h.size() - suffix.size() - 1);
  const auto dot = prefix.rfind('.');
  return dot == std::string_view::npos ? h : h.substr(dot + 1);
}

}  // namespace phishnet
