#include "phishnet/html.hpp"

#include <cctype>

#include "phishnet/url.hpp"

namespace phishnet {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

void append_collapsed(std::string& out, std::string_view text) {
  for (char c : text) {
    if (is_space(c)) {
      if (!out.empty() && out.back() != ' ') out += ' ';
    } else {
      out += c;
    }
  }
}

std::string collapse(std::string_view text) {
  std::string out;
  append_collapsed(out, text);
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

// Decodes the handful of entities that matter for URL and text comparisons.
std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '&') {
      static constexpr std::pair<std::string_view, char> kEntities[] = {
          {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}, {"&#39;", '\''}, {"&apos;", '\''},
          {"&nbsp;", ' '}};
      bool matched = false;
      for (const auto& [name, ch] : kEntities) {
        if (s.substr(i, name.size()) == name) {
          out += ch;
          i += name.size() - 1;
          matched = true;
          break;
        }
      }
      if (matched) continue;
    }
    out += s[i];
  }
  return out;
}

class Scanner {
 public:
  explicit Scanner(std::string_view html) : s_(html) {}

  HtmlDocument run() {
    std::string text_raw;
    while (pos_ < s_.size()) {
      const auto lt = s_.find('<', pos_);
      const std::string_view text = s_.substr(pos_, lt == std::string_view::npos ? lt : lt - pos_);
      on_text(text);
      if (lt == std::string_view::npos) break;
      pos_ = lt;
      if (s_.substr(pos_, 4) == "<!--") {
        const auto end = s_.find("-->", pos_ + 4);
        pos_ = end == std::string_view::npos ? s_.size() : end + 3;
        continue;
      }
      if (pos_ + 1 < s_.size() && (s_[pos_ + 1] == '!' || s_[pos_ + 1] == '?')) {
        const auto end = s_.find('>', pos_);
        pos_ = end == std::string_view::npos ? s_.size() : end + 1;
        continue;
      }
      if (pos_ + 1 >= s_.size() ||
          !(std::isalpha(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '/')) {
        on_text("<");
        ++pos_;
        continue;
      }
      HtmlTag tag = read_tag();
      on_tag(tag);
      doc_.tags.push_back(std::move(tag));
    }
    finish_anchor();
    finish_form();
    doc_.visible_text = collapse(decode_entities(doc_.visible_text));
    doc_.title = collapse(decode_entities(doc_.title));
    return std::move(doc_);
  }

 private:
  HtmlTag read_tag() {
    HtmlTag tag;
    ++pos_;  // '<'
    if (pos_ < s_.size() && s_[pos_] == '/') {
      tag.closing = true;
      ++pos_;
    }
    const std::size_t name_start = pos_;
    while (pos_ < s_.size() && !is_space(s_[pos_]) && s_[pos_] != '>' && s_[pos_] != '/') ++pos_;
    tag.name = to_lower(s_.substr(name_start, pos_ - name_start));

    while (pos_ < s_.size()) {
      while (pos_ < s_.size() && (is_space(s_[pos_]) || s_[pos_] == '/')) ++pos_;
      if (pos_ >= s_.size()) break;
      if (s_[pos_] == '>') {
        ++pos_;
        break;
      }
      const std::size_t an = pos_;
      while (pos_ < s_.size() && !is_space(s_[pos_]) && s_[pos_] != '=' && s_[pos_] != '>' &&
             s_[pos_] != '/') {
        ++pos_;
      }
      std::string name = to_lower(s_.substr(an, pos_ - an));
      while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
      std::string value;
      if (pos_ < s_.size() && s_[pos_] == '=') {
        ++pos_;
        while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == '"' || s_[pos_] == '\'')) {
          const char q = s_[pos_++];
          const auto end = s_.find(q, pos_);
          const std::size_t stop = end == std::string_view::npos ? s_.size() : end;
          value = decode_entities(s_.substr(pos_, stop - pos_));
          pos_ = end == std::string_view::npos ? s_.size() : end + 1;
        } else {
          const std::size_t vs = pos_;
          while (pos_ < s_.size() && !is_space(s_[pos_]) && s_[pos_] != '>') ++pos_;
          value = decode_entities(s_.substr(vs, pos_ - vs));
        }
      }
      if (!name.empty()) tag.attributes.emplace_back(std::move(name), std::move(value));
    }
    return tag;
  }

  void on_text(std::string_view text) {
    if (text.empty()) return;
    if (in_title_) doc_.title.append(text);
    if (in_anchor_) anchor_text_.append(text);
    doc_.visible_text.append(text);
    doc_.visible_text += ' ';
  }

  void on_tag(const HtmlTag& tag) {
    if (!tag.closing && (tag.name == "script" || tag.name == "style")) {
      // Raw text element: skip to the matching close tag.
      const std::string close = "</" + tag.name;
      std::size_t end = pos_;
      while (true) {
        end = s_.find('<', end);
        if (end == std::string_view::npos || to_lower(s_.substr(end, close.size())) == close) break;
        ++end;
      }
      const std::string_view body =
          s_.substr(pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_);
      if (tag.name == "script") doc_.scripts.emplace_back(body);
      pos_ = end == std::string_view::npos ? s_.size() : end;
      return;
    }
    if (tag.name == "title") {
      in_title_ = !tag.closing;
    } else if (tag.name == "a") {
      finish_anchor();
      if (!tag.closing) {
        in_anchor_ = true;
        anchor_ = HtmlAnchor{tag.attr("href"), {}, tag.attr("onmouseover")};
      }
    } else if (tag.name == "form") {
      finish_form();
      if (!tag.closing) {
        in_form_ = true;
        form_ = HtmlForm{};
        form_.action = tag.attr("action");
        form_.method = to_lower(tag.attr("method").value_or("get"));
      }
    } else if (in_form_ && !tag.closing && tag.name == "input") {
      const std::string type = to_lower(tag.attr("type").value_or("text"));
      form_.input_types.push_back(type);
      if (type == "submit" || type == "image") form_.has_submit = true;
    } else if (in_form_ && !tag.closing && tag.name == "button") {
      const std::string type = to_lower(tag.attr("type").value_or("submit"));
      if (type == "submit") form_.has_submit = true;
    }
  }

  void finish_anchor() {
    if (!in_anchor_) return;
    anchor_.text = collapse(decode_entities(anchor_text_));
    doc_.anchors.push_back(std::move(anchor_));
    anchor_text_.clear();
    in_anchor_ = false;
  }

  void finish_form() {
    if (!in_form_) return;
    doc_.forms.push_back(std::move(form_));
    in_form_ = false;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  HtmlDocument doc_;
  bool in_title_ = false;
  bool in_anchor_ = false;
  bool in_form_ = false;
  HtmlAnchor anchor_;
  std::string anchor_text_;
  HtmlForm form_;
};

}  // namespace

std::optional<std::string> HtmlTag::attr(std::string_view name) const {
  for (const auto& [k, v] : attributes) {
    if (k == name) return v;
  }
  return std::nullopt;
}

bool HtmlForm::has_input(std::string_view type) const {
  for (const auto& t : input_types) {
    if (t == type) return true;
  }
  return false;
}

HtmlDocument parse_html(std::string_view html) { return Scanner(html).run(); }

}  // namespace phishnet
