#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace phishnet::detail {

// RFC 3492 decoding of one label without the "xn--" prefix. Returns code points.
std::optional<std::u32string> punycode_decode(std::string_view label);

// Folds visually confusable code points (Cyrillic/Greek look-alikes, accented
// Latin) onto ASCII letters. Anything unmapped becomes '?'.
std::string fold_confusables(std::u32string_view text);

}  // namespace phishnet::detail
