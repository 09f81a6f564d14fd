#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>

namespace phishnet {

// Public-suffix rules in the Mozilla list syntax (plain, "*." wildcard and
// "!" exception rules). Lookups follow the list's prevailing-rule algorithm
// with the implicit "*" default.
class PublicSuffixList {
 public:
  PublicSuffixList() = default;

  static PublicSuffixList parse(std::string_view text);
  static PublicSuffixList from_file(const std::string& path);
  // The snapshot compiled into the library.
  static const PublicSuffixList& bundled();

  // "www.foo.co.uk" -> "foo.co.uk". Returns the host itself when it is a
  // public suffix or a single label.
  std::string registered_domain(std::string_view host) const;
  std::string public_suffix(std::string_view host) const;

  std::size_t size() const noexcept { return rules_.size() + wildcards_.size() + exceptions_.size(); }

 private:
  std::unordered_set<std::string> rules_;
  std::unordered_set<std::string> wildcards_;   // stored without the "*."
  std::unordered_set<std::string> exceptions_;  // stored without the "!"
};

}  // namespace phishnet
