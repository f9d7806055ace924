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

// A small error-recovering HTML parser producing an ordered labeled tree.
//
// Model output is often truncated or sloppy, so the parser never rejects
// markup: unknown end tags are ignored, unclosed elements are closed at end
// of input, and the usual implied end tags (li, p, td, tr, option, dt/dd,
// table sections, headings) are applied.

#ifndef DOCEDIT_HTML_H_
#define DOCEDIT_HTML_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace docedit {

inline constexpr std::string_view kTextLabel = "#text";
inline constexpr std::string_view kDocumentLabel = "#document";

struct DomNode {
  // Lowercase tag name, "#text" for text, or "#document" for the synthetic
  // root used when the input has several top-level nodes.
  std::string label;
  // Attribute names are lowercased; values are entity-decoded. Source order.
  std::vector<std::pair<std::string, std::string>> attributes;
  // Text content for "#text" nodes; raw stylesheet text for <style>.
  std::string text;
  std::vector<DomNode> children;

  bool is_text() const { return label == kTextLabel; }
  const std::string* FindAttribute(std::string_view name) const;

  friend bool operator==(const DomNode&, const DomNode&) = default;
};

struct DomTree {
  DomNode root;

  std::size_t size() const;
  friend bool operator==(const DomTree&, const DomTree&) = default;
};

// Throws Error(kEmptyDocument) when the input holds no element at all.
// Comments, doctype, processing instructions and script bodies are dropped;
// whitespace-only text yields no node.
DomTree ParseHtml(std::string_view html);

// Re-emits markup that parses back to an equal tree.
std::string SerializeHtml(const DomTree& tree);

// Text node contents in document order, joined by single spaces.
std::string VisibleText(const DomTree& tree);

std::string DecodeEntities(std::string_view text);

}  // namespace docedit

#endif  // DOCEDIT_HTML_H_
