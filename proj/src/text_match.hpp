#pragma once

#include <cctype>
#include <string>
#include <string_view>

namespace phishnet::detail {

inline bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Case-sensitive search for `phrase` in `text` where the match is not glued to
// a letter or digit on either side. Both arguments are expected lowercase.
inline bool contains_phrase(std::string_view text, std::string_view phrase) {
  if (phrase.empty()) return false;
  std::size_t pos = 0;
  while ((pos = text.find(phrase, pos)) != std::string_view::npos) {
    const bool left_ok = pos == 0 || !is_word_char(text[pos - 1]) || !is_word_char(phrase.front());
    const std::size_t end = pos + phrase.size();
    const bool right_ok = end >= text.size() || !is_word_char(text[end]) || !is_word_char(phrase.back());
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

}  // namespace phishnet::detail
