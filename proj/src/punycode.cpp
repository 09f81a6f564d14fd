#include "punycode.hpp"

#include <cctype>
#include <cstdint>

namespace phishnet::detail {

namespace {

constexpr std::uint32_t kBase = 36;
constexpr std::uint32_t kTMin = 1;
constexpr std::uint32_t kTMax = 26;
constexpr std::uint32_t kSkew = 38;
constexpr std::uint32_t kDamp = 700;
constexpr std::uint32_t kInitialBias = 72;
constexpr std::uint32_t kInitialN = 128;
constexpr std::uint32_t kMaxInt = 0x7FFFFFFF;

std::uint32_t adapt(std::uint32_t delta, std::uint32_t num_points, bool first) {
  delta = first ? delta / kDamp : delta / 2;
  delta += delta / num_points;
  std::uint32_t k = 0;
  while (delta > ((kBase - kTMin) * kTMax) / 2) {
    delta /= kBase - kTMin;
    k += kBase;
  }
  return k + (kBase - kTMin + 1) * delta / (delta + kSkew);
}

std::optional<std::uint32_t> digit_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0' + 26);
  if (c >= 'a' && c <= 'z') return static_cast<std::uint32_t>(c - 'a');
  if (c >= 'A' && c <= 'Z') return static_cast<std::uint32_t>(c - 'A');
  return std::nullopt;
}

}  // namespace

std::optional<std::u32string> punycode_decode(std::string_view label) {
  std::u32string out;
  const auto delim = label.rfind('-');
  std::size_t in = 0;
  if (delim != std::string_view::npos) {
    for (std::size_t i = 0; i < delim; ++i) {
      if (static_cast<unsigned char>(label[i]) >= 0x80) return std::nullopt;
      out.push_back(static_cast<char32_t>(label[i]));
    }
    in = delim + 1;
  }
  std::uint32_t n = kInitialN;
  std::uint32_t i = 0;
  std::uint32_t bias = kInitialBias;
  while (in < label.size()) {
    const std::uint32_t old_i = i;
    std::uint32_t w = 1;
    for (std::uint32_t k = kBase;; k += kBase) {
      if (in >= label.size()) return std::nullopt;
      const auto digit = digit_value(label[in++]);
      if (!digit) return std::nullopt;
      if (*digit > (kMaxInt - i) / w) return std::nullopt;
      i += *digit * w;
      const std::uint32_t t = k <= bias ? kTMin : (k >= bias + kTMax ? kTMax : k - bias);
      if (*digit < t) break;
      if (w > kMaxInt / (kBase - t)) return std::nullopt;
      w *= kBase - t;
    }
    const auto len = static_cast<std::uint32_t>(out.size() + 1);
    bias = adapt(i - old_i, len, old_i == 0);
    if (i / len > kMaxInt - n) return std::nullopt;
    n += i / len;
    i %= len;
    out.insert(out.begin() + i, static_cast<char32_t>(n));
    ++i;
  }
  return out;
}

std::string fold_confusables(std::u32string_view text) {
  std::string out;
  for (char32_t c : text) {
    if (c < 0x80) {
      out += static_cast<char>(std::tolower(static_cast<int>(c)));
      continue;
    }
    char m = '?';
    switch (c) {
      // Cyrillic
      case U'а': m = 'a'; break;
      case U'е': m = 'e'; break;
      case U'о': m = 'o'; break;
      case U'р': m = 'p'; break;
      case U'с': m = 'c'; break;
      case U'у': m = 'y'; break;
      case U'х': m = 'x'; break;
      case U'і': m = 'i'; break;
      case U'ј': m = 'j'; break;
      case U'ѕ': m = 's'; break;
      case U'ԁ': m = 'd'; break;
      case U'һ': m = 'h'; break;
      case U'ӏ': m = 'l'; break;
      case U'ԛ': m = 'q'; break;
      case U'ԝ': m = 'w'; break;
      case U'в': m = 'b'; break;
      case U'к': m = 'k'; break;
      case U'м': m = 'm'; break;
      case U'н': m = 'h'; break;
      case U'т': m = 't'; break;
      // Greek
      case U'α': m = 'a'; break;
      case U'ο': m = 'o'; break;
      case U'ν': m = 'v'; break;
      case U'ρ': m = 'p'; break;
      case U'ι': m = 'i'; break;
      case U'κ': m = 'k'; break;
      case U'τ': m = 't'; break;
      case U'ε': m = 'e'; break;
      default:
        if (c >= 0xE0 && c <= 0xE5) m = 'a';
        else if (c >= 0xE8 && c <= 0xEB) m = 'e';
        else if (c >= 0xEC && c <= 0xEF) m = 'i';
        else if ((c >= 0xF2 && c <= 0xF6) || c == 0xF8) m = 'o';
        else if (c >= 0xF9 && c <= 0xFC) m = 'u';
        else if (c == 0xFD || c == 0xFF) m = 'y';
        else if (c == 0xF1) m = 'n';
        else if (c == 0xE7) m = 'c';
        break;
    }
    out += m;
  }
  return out;
}

}  // namespace phishnet::detail
