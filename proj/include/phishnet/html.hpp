#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phishnet {

// Tag-level view of an HTML page. The scanner is tolerant: it never throws,
// unterminated constructs run to end of input, and no DOM is built.
struct HtmlTag {
  std::string name;  // lowercased, without '/'
  bool closing = false;
  std::vector<std::pair<std::string, std::string>> attributes;  // names lowercased

  std::optional<std::string> attr(std::string_view name) const;
  bool has_attr(std::string_view name) const { return attr(name).has_value(); }
};

struct HtmlAnchor {
  std::optional<std::string> href;
  std::string text;  // visible text between <a> and </a>, whitespace-collapsed
  std::optional<std::string> onmouseover;
};

struct HtmlForm {
  std::optional<std::string> action;  // nullopt when the attribute is absent
  std::string method;                 // lowercased, "get" by default
  std::vector<std::string> input_types;
  bool has_submit = false;

  bool has_input(std::string_view type) const;
};

struct HtmlDocument {
  std::vector<HtmlTag> tags;  // opening and closing tags in document order
  std::vector<HtmlAnchor> anchors;
  std::vector<HtmlForm> forms;
  std::vector<std::string> scripts;  // inline <script> bodies
  std::string title;
  std::string visible_text;  // text outside script/style, whitespace-collapsed
};

HtmlDocument parse_html(std::string_view html);

}  // namespace phishnet
