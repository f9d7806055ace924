// Copyright 2026 The DocEdit Tools Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "docedit/html.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "docedit/error.h"
#include "docedit/strings.h"

namespace docedit {
namespace {

template <std::size_t N>
bool OneOf(std::string_view name, const std::array<std::string_view, N>& set) {
  return std::find(set.begin(), set.end(), name) != set.end();
}

constexpr std::array<std::string_view, 14> kVoidElements = {
    "area", "base", "br", "col", "embed", "hr", "img",
    "input", "link", "meta", "param", "source", "track", "wbr"};

// Start tags that implicitly close an open <p>.
constexpr std::array<std::string_view, 31> kClosesParagraph = {
    "address", "article", "aside", "blockquote", "center", "details", "dialog", "dir",
    "div", "dl", "fieldset", "figcaption", "figure", "footer", "form", "h1",
    "h2", "h3", "h4", "h5", "h6", "header", "hgroup", "hr",
    "main", "menu", "nav", "ol", "p", "pre", "section"};

constexpr std::array<std::string_view, 3> kClosesParagraphExtra = {"table", "ul", "search"};

constexpr std::array<std::string_view, 6> kHeadings = {"h1", "h2", "h3", "h4", "h5", "h6"};

// Elements that stop the search for an implicitly closed ancestor.
constexpr std::array<std::string_view, 11> kScopeBoundary = {
    "html", "body", "table", "td", "th", "caption", "ul", "ol", "menu", "button", "template"};

bool IsNameStart(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

bool IsNameChar(char c) {
  return IsNameStart(c) || (c >= '0' && c <= '9') || c == '-' || c == '_' || c == ':' || c == '.';
}

void AppendUtf8(std::uint32_t cp, std::string* out) {
  if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::optional<std::uint32_t> NamedEntity(std::string_view name) {
  struct Entry {
    std::string_view name;
    std::uint32_t cp;
  };
  static constexpr Entry kEntities[] = {
      {"amp", '&'},       {"lt", '<'},         {"gt", '>'},         {"quot", '"'},
      {"apos", '\''},     {"nbsp", 0xA0},      {"copy", 0xA9},      {"reg", 0xAE},
      {"trade", 0x2122},  {"ndash", 0x2013},   {"mdash", 0x2014},   {"hellip", 0x2026},
      {"lsquo", 0x2018},  {"rsquo", 0x2019},   {"ldquo", 0x201C},   {"rdquo", 0x201D},
      {"bull", 0x2022},   {"middot", 0xB7},    {"deg", 0xB0},       {"times", 0xD7},
      {"euro", 0x20AC},   {"pound", 0xA3},     {"sect", 0xA7},      {"para", 0xB6},
  };
  for (const Entry& e : kEntities) {
    if (e.name == name) return e.cp;
  }
  return std::nullopt;
}

class TreeBuilder {
 public:
  TreeBuilder() {
    document_.label = std::string(kDocumentLabel);
    stack_.push_back(&document_);
  }

  void Text(std::string_view raw, bool decode) {
    std::string content = decode ? DecodeEntities(raw) : std::string(raw);
    if (Trim(content).empty()) return;
    DomNode* parent = stack_.back();
    if (!parent->children.empty() && parent->children.back().is_text()) {
      parent->children.back().text += content;
      return;
    }
    DomNode node;
    node.label = std::string(kTextLabel);
    node.text = std::move(content);
    parent->children.push_back(std::move(node));
  }

  // Returns the opened node, or nullptr when the tag was void or ignored.
  DomNode* StartTag(const std::string& name,
                    std::vector<std::pair<std::string, std::string>> attributes,
                    bool self_closing) {
    if (name == "html" || name == "head" || name == "body") {
      if (std::find(seen_singletons_.begin(), seen_singletons_.end(), name) !=
          seen_singletons_.end()) {
        return nullptr;
      }
      seen_singletons_.push_back(name);
    }
    ApplyImpliedEndTags(name);

    DomNode node;
    node.label = name;
    node.attributes = std::move(attributes);
    DomNode* parent = stack_.back();
    parent->children.push_back(std::move(node));
    DomNode* opened = &parent->children.back();
    if (self_closing || OneOf(name, kVoidElements)) return nullptr;
    stack_.push_back(opened);
    return opened;
  }

  void EndTag(std::string_view name) {
    for (std::size_t i = stack_.size(); i-- > 1;) {
      if (stack_[i]->label == name) {
        stack_.resize(i);
        return;
      }
    }
  }

  DomNode Finish() && { return std::move(document_); }

 private:
  bool CurrentIs(std::string_view name) const { return stack_.back()->label == name; }

  // Pops through the nearest open element named in `targets`, searching no
  // further than a scope boundary. Returns true if something was closed.
  template <std::size_t N>
  bool CloseInScope(const std::array<std::string_view, N>& targets,
                    std::span<const std::string_view> extra_boundaries = {}) {
    for (std::size_t i = stack_.size(); i-- > 1;) {
      const std::string& label = stack_[i]->label;
      if (OneOf(label, targets)) {
        stack_.resize(i);
        return true;
      }
      if (OneOf(label, kScopeBoundary) ||
          std::find(extra_boundaries.begin(), extra_boundaries.end(), label) !=
              extra_boundaries.end()) {
        return false;
      }
    }
    return false;
  }

  void ApplyImpliedEndTags(std::string_view name) {
    static constexpr std::array<std::string_view, 1> kP = {"p"};
    if (OneOf(name, kClosesParagraph) || OneOf(name, kClosesParagraphExtra) ||
        name == "li" || name == "dt" || name == "dd") {
      CloseInScope(kP);
    }
    if (name == "li") {
      static constexpr std::array<std::string_view, 1> kLi = {"li"};
      CloseInScope(kLi);
    } else if (name == "dt" || name == "dd") {
      static constexpr std::array<std::string_view, 2> kDtDd = {"dt", "dd"};
      static constexpr std::array<std::string_view, 1> kDl = {"dl"};
      CloseInScope(kDtDd, kDl);
    } else if (name == "option") {
      if (CurrentIs("option")) stack_.pop_back();
    } else if (name == "optgroup") {
      if (CurrentIs("option")) stack_.pop_back();
      if (CurrentIs("optgroup")) stack_.pop_back();
    } else if (name == "tr") {
      static constexpr std::array<std::string_view, 1> kTr = {"tr"};
      CloseCellsAndRows(kTr);
    } else if (name == "td" || name == "th") {
      static constexpr std::array<std::string_view, 2> kCells = {"td", "th"};
      CloseCellsAndRows(kCells);
    } else if (name == "thead" || name == "tbody" || name == "tfoot") {
      static constexpr std::array<std::string_view, 3> kSections = {"thead", "tbody", "tfoot"};
      CloseCellsAndRows(kSections);
    } else if (OneOf(name, kHeadings)) {
      if (OneOf(stack_.back()->label, kHeadings)) stack_.pop_back();
    }
  }

  // Table-internal closing: searches up to the enclosing table only, so
  // cells of an outer table are never closed by a nested one. A new cell
  // also stops at its row.
  template <std::size_t N>
  void CloseCellsAndRows(const std::array<std::string_view, N>& targets) {
    const bool is_cell = targets.front() == "td";
    for (std::size_t i = stack_.size(); i-- > 1;) {
      const std::string& label = stack_[i]->label;
      if (OneOf(label, targets)) {
        stack_.resize(i);
        return;
      }
      if (label == "table" || (is_cell && label == "tr")) return;
    }
  }

  DomNode document_;
  std::vector<DomNode*> stack_;
  std::vector<std::string> seen_singletons_;
};

// Stateless cursor over the markup.
class Tokenizer {
 public:
  explicit Tokenizer(std::string_view input) : in_(input) {}

  void Run(TreeBuilder* builder) {
    std::size_t text_start = 0;
    while (pos_ < in_.size()) {
      if (in_[pos_] != '<') {
        ++pos_;
        continue;
      }
      const std::size_t tag_start = pos_;
      if (!LooksLikeMarkup()) {
        ++pos_;
        continue;
      }
      builder->Text(in_.substr(text_start, tag_start - text_start), /*decode=*/true);
      ConsumeMarkup(builder);
      text_start = pos_;
    }
    builder->Text(in_.substr(text_start), /*decode=*/true);
  }

 private:
  bool LooksLikeMarkup() const {
    if (pos_ + 1 >= in_.size()) return false;
    const char next = in_[pos_ + 1];
    if (next == '!' || next == '?') return true;
    if (next == '/') return pos_ + 2 < in_.size() && IsNameStart(in_[pos_ + 2]);
    return IsNameStart(next);
  }

  void SkipPast(std::string_view terminator) {
    const std::size_t end = in_.find(terminator, pos_);
    pos_ = (end == std::string_view::npos) ? in_.size() : end + terminator.size();
  }

  std::string ReadName() {
    std::string name;
    while (pos_ < in_.size() && IsNameChar(in_[pos_])) name.push_back(AsciiLower(in_[pos_++]));
    return name;
  }

  void SkipSpace() {
    while (pos_ < in_.size() && IsAsciiSpace(in_[pos_])) ++pos_;
  }

  void ConsumeMarkup(TreeBuilder* builder) {
    if (in_.compare(pos_, 4, "<!--") == 0) {
      pos_ += 4;
      SkipPast("-->");
      return;
    }
    if (in_[pos_ + 1] == '!' || in_[pos_ + 1] == '?') {
      SkipPast(">");
      return;
    }
    if (in_[pos_ + 1] == '/') {
      pos_ += 2;
      const std::string name = ReadName();
      SkipPast(">");
      builder->EndTag(name);
      return;
    }

    ++pos_;
    const std::string name = ReadName();
    std::vector<std::pair<std::string, std::string>> attributes;
    bool self_closing = false;
    while (pos_ < in_.size()) {
      SkipSpace();
      if (pos_ >= in_.size()) break;
      const char c = in_[pos_];
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '/') {
        ++pos_;
        SkipSpace();
        if (pos_ < in_.size() && in_[pos_] == '>') {
          self_closing = true;
          ++pos_;
          break;
        }
        continue;
      }
      std::string attr_name;
      while (pos_ < in_.size() && !IsAsciiSpace(in_[pos_]) && in_[pos_] != '>' &&
             in_[pos_] != '=' && !(in_[pos_] == '/' && attr_name.size() > 0)) {
        attr_name.push_back(AsciiLower(in_[pos_++]));
      }
      if (attr_name.empty()) {
        ++pos_;  // lone '=' or similar junk
        continue;
      }
      SkipSpace();
      std::string value;
      if (pos_ < in_.size() && in_[pos_] == '=') {
        ++pos_;
        SkipSpace();
        if (pos_ < in_.size() && (in_[pos_] == '"' || in_[pos_] == '\'')) {
          const char quote = in_[pos_++];
          const std::size_t end = in_.find(quote, pos_);
          const std::size_t stop = end == std::string_view::npos ? in_.size() : end;
          value = DecodeEntities(in_.substr(pos_, stop - pos_));
          pos_ = end == std::string_view::npos ? in_.size() : end + 1;
        } else {
          const std::size_t begin = pos_;
          while (pos_ < in_.size() && !IsAsciiSpace(in_[pos_]) && in_[pos_] != '>') ++pos_;
          value = DecodeEntities(in_.substr(begin, pos_ - begin));
        }
      }
      const bool duplicate =
          std::any_of(attributes.begin(), attributes.end(),
                      [&](const auto& a) { return a.first == attr_name; });
      if (!duplicate) attributes.emplace_back(std::move(attr_name), std::move(value));
    }

    DomNode* opened = builder->StartTag(name, std::move(attributes), self_closing);
    if (opened == nullptr) return;
    if (name == "script" || name == "style") {
      const std::string_view raw = ReadRawText(name);
      if (name == "style") opened->text = std::string(raw);
      builder->EndTag(name);
    } else if (name == "title" || name == "textarea") {
      const std::string_view raw = ReadRawText(name);
      builder->Text(raw, /*decode=*/true);
      builder->EndTag(name);
    }
  }

  // Content up to the matching close tag (case-insensitive); consumes the
  // close tag as well.
  std::string_view ReadRawText(std::string_view name) {
    const std::size_t begin = pos_;
    std::size_t search = pos_;
    while (true) {
      const std::size_t lt = in_.find("</", search);
      if (lt == std::string_view::npos) {
        pos_ = in_.size();
        return in_.substr(begin);
      }
      const std::string_view candidate = in_.substr(lt + 2, name.size());
      const std::size_t after = lt + 2 + name.size();
      if (EqualsIgnoreCase(candidate, name) &&
          (after >= in_.size() || !IsNameChar(in_[after]))) {
        pos_ = lt + 2;
        SkipPast(">");
        return in_.substr(begin, lt - begin);
      }
      search = lt + 2;
    }
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

bool HasElement(const DomNode& node) {
  return std::any_of(node.children.begin(), node.children.end(),
                     [](const DomNode& c) { return !c.is_text(); });
}

std::size_t CountNodes(const DomNode& node) {
  std::size_t n = 1;
  for (const DomNode& child : node.children) n += CountNodes(child);
  return n;
}

void EscapeInto(std::string_view text, bool attribute, std::string* out) {
  for (char c : text) {
    switch (c) {
      case '&': out->append("&amp;"); break;
      case '<': out->append("&lt;"); break;
      case '>': out->append("&gt;"); break;
      case '"':
        if (attribute) {
          out->append("&quot;");
          break;
        }
        [[fallthrough]];
      default: out->push_back(c);
    }
  }
}

void SerializeNode(const DomNode& node, std::string* out) {
  if (node.is_text()) {
    EscapeInto(node.text, /*attribute=*/false, out);
    return;
  }
  if (node.label == kDocumentLabel) {
    for (const DomNode& child : node.children) SerializeNode(child, out);
    return;
  }
  out->push_back('<');
  out->append(node.label);
  for (const auto& [name, value] : node.attributes) {
    out->push_back(' ');
    out->append(name);
    out->append("=\"");
    EscapeInto(value, /*attribute=*/true, out);
    out->push_back('"');
  }
  out->push_back('>');
  if (OneOf(node.label, kVoidElements)) return;
  if (node.label == "style") out->append(node.text);
  for (const DomNode& child : node.children) SerializeNode(child, out);
  out->append("</");
  out->append(node.label);
  out->push_back('>');
}

void CollectText(const DomNode& node, std::string* out) {
  if (node.is_text()) {
    const std::string collapsed = CollapseWhitespace(node.text);
    if (collapsed.empty()) return;
    if (!out->empty()) out->push_back(' ');
    out->append(collapsed);
    return;
  }
  for (const DomNode& child : node.children) CollectText(child, out);
}

}  // namespace

const std::string* DomNode::FindAttribute(std::string_view name) const {
  for (const auto& [key, value] : attributes) {
    if (key == name) return &value;
  }
  return nullptr;
}

std::size_t DomTree::size() const { return CountNodes(root); }

std::string DecodeEntities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out.push_back(text[i++]);
      continue;
    }
    const std::size_t semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out.push_back(text[i++]);
      continue;
    }
    const std::string_view ref = text.substr(i + 1, semi - i - 1);
    std::optional<std::uint32_t> cp;
    if (ref.size() >= 2 && ref[0] == '#') {
      const bool hex = ref[1] == 'x' || ref[1] == 'X';
      const std::string_view digits = ref.substr(hex ? 2 : 1);
      std::uint32_t value = 0;
      bool ok = !digits.empty();
      for (char c : digits) {
        int d = -1;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (hex && c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') d = c - 'A' + 10;
        if (d < 0 || value > 0x10FFFF) {
          ok = false;
          break;
        }
        value = value * (hex ? 16 : 10) + static_cast<std::uint32_t>(d);
      }
      if (ok) cp = value;
    } else {
      cp = NamedEntity(ref);
    }
    if (!cp) {
      out.push_back(text[i++]);
      continue;
    }
    AppendUtf8(*cp, &out);
    i = semi + 1;
  }
  return out;
}

DomTree ParseHtml(std::string_view html) {
  TreeBuilder builder;
  Tokenizer(html).Run(&builder);
  DomNode document = std::move(builder).Finish();
  if (!HasElement(document)) {
    throw Error(ErrorCode::kEmptyDocument, "no element found in input");
  }
  DomTree tree;
  if (document.children.size() == 1) {
    tree.root = std::move(document.children.front());
  } else {
    tree.root = std::move(document);
  }
  return tree;
}

std::string SerializeHtml(const DomTree& tree) {
  std::string out;
  SerializeNode(tree.root, &out);
  return out;
}

std::string VisibleText(const DomTree& tree) {
  std::string out;
  CollectText(tree.root, &out);
  return out;
}

}  // namespace docedit
