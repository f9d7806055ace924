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

#include "docedit/css.h"

#include <algorithm>
#include <iterator>
#include <utility>
#include <vector>

#include "docedit/error.h"
#include "docedit/strings.h"

namespace docedit {
namespace {

std::string StripComments(std::string_view css) {
  std::string out;
  out.reserve(css.size());
  std::size_t i = 0;
  while (i < css.size()) {
    if (css.compare(i, 2, "/*") == 0) {
      const std::size_t end = css.find("*/", i + 2);
      if (end == std::string_view::npos) break;
      i = end + 2;
      out.push_back(' ');
      continue;
    }
    out.push_back(css[i++]);
  }
  return out;
}

// Finds the next `stop` character at nesting depth zero, skipping strings
// and parenthesised groups. Returns npos when absent.
std::size_t FindTopLevel(std::string_view s, std::size_t from, std::string_view stops) {
  int parens = 0;
  char quote = 0;
  for (std::size_t i = from; i < s.size(); ++i) {
    const char c = s[i];
    if (quote != 0) {
      if (c == '\\') {
        ++i;
      } else if (c == quote) {
        quote = 0;
      }
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '(') {
      ++parens;
    } else if (c == ')') {
      parens = std::max(0, parens - 1);
    } else if (parens == 0 && stops.find(c) != std::string_view::npos) {
      return i;
    }
  }
  return std::string_view::npos;
}

// Index of the '}' matching the '{' at `open`, or s.size() if unbalanced.
std::size_t MatchingBrace(std::string_view s, std::size_t open) {
  int depth = 0;
  char quote = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    const char c = s[i];
    if (quote != 0) {
      if (c == '\\') {
        ++i;
      } else if (c == quote) {
        quote = 0;
      }
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}' && --depth == 0) {
      return i;
    }
  }
  return s.size();
}

std::vector<std::string> SplitSelectors(std::string_view prelude) {
  std::vector<std::string> selectors;
  std::size_t begin = 0;
  while (begin <= prelude.size()) {
    std::size_t comma = FindTopLevel(prelude, begin, ",");
    if (comma == std::string_view::npos) comma = prelude.size();
    selectors.push_back(CollapseWhitespace(prelude.substr(begin, comma - begin)));
    begin = comma + 1;
  }
  return selectors;
}

void ParseRules(std::string_view css, std::string_view prefix, CssExtraction* out) {
  std::size_t pos = 0;
  while (pos < css.size()) {
    const std::size_t stop = FindTopLevel(css, pos, "{;}");
    if (stop == std::string_view::npos) {
      if (!Trim(css.substr(pos)).empty()) ++out->skipped_declarations;
      return;
    }
    const std::string_view prelude = Trim(css.substr(pos, stop - pos));
    if (css[stop] != '{') {
      // Statement at-rule (@import, @charset) or stray terminator.
      pos = stop + 1;
      continue;
    }
    const std::size_t close = MatchingBrace(css, stop);
    const std::string_view block = css.substr(stop + 1, close - stop - 1);
    pos = close + 1;
    if (prelude.empty()) {
      ++out->skipped_declarations;
      continue;
    }

    if (prelude.front() == '@') {
      std::string scope = CollapseWhitespace(prelude);
      if (!prefix.empty()) scope = std::string(prefix) + " " + scope;
      if (FindTopLevel(block, 0, "{") != std::string_view::npos) {
        ParseRules(block, scope, out);
      } else {
        ParseDeclarations(block, scope, out);
      }
      continue;
    }

    for (const std::string& selector : SplitSelectors(prelude)) {
      if (selector.empty()) {
        ++out->skipped_declarations;
        continue;
      }
      const std::string scope =
          prefix.empty() ? selector : std::string(prefix) + " " + selector;
      ParseDeclarations(block, scope, out);
    }
  }
}

void CollectFromNode(const DomNode& node, CssExtraction* out) {
  if (node.is_text()) return;
  if (node.label == "style") ParseStylesheet(node.text, out);
  if (const std::string* style = node.FindAttribute("style")) {
    ParseDeclarations(*style, kInlineScope, out);
  }
  for (const DomNode& child : node.children) CollectFromNode(child, out);
}

}  // namespace

void ParseDeclarations(std::string_view block, std::string_view scope, CssExtraction* out) {
  const std::string text = StripComments(block);
  const std::string_view view = text;
  std::size_t begin = 0;
  while (begin < view.size()) {
    std::size_t semi = FindTopLevel(view, begin, ";");
    if (semi == std::string_view::npos) semi = view.size();
    const std::string_view decl = Trim(view.substr(begin, semi - begin));
    begin = semi + 1;
    if (decl.empty()) continue;
    const std::size_t colon = decl.find(':');
    if (colon == std::string_view::npos) {
      ++out->skipped_declarations;
      continue;
    }
    std::string property = AsciiLower(CollapseWhitespace(decl.substr(0, colon)));
    std::string value = AsciiLower(CollapseWhitespace(decl.substr(colon + 1)));
    if (property.empty() || value.empty() ||
        property.find_first_of(" {}") != std::string::npos) {
      ++out->skipped_declarations;
      continue;
    }
    out->pairs.insert(CssEntry{std::string(scope), std::move(property), std::move(value)});
  }
}

void ParseStylesheet(std::string_view css, CssExtraction* out) {
  const std::string text = StripComments(css);
  ParseRules(text, "", out);
}

CssExtraction ExtractCss(const DomTree& tree) {
  CssExtraction out;
  CollectFromNode(tree.root, &out);
  return out;
}

CssExtraction ExtractCss(std::string_view html) {
  try {
    return ExtractCss(ParseHtml(html));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmptyDocument) throw;
    return {};
  }
}

double CssIou(const CssPairSet& a, const CssPairSet& b, CssIouOptions options) {
  if (!options.keep_scope) {
    CssPairSet pa;
    CssPairSet pb;
    for (const CssEntry& e : a) pa.insert({"", e.property, e.value});
    for (const CssEntry& e : b) pb.insert({"", e.property, e.value});
    return CssIou(pa, pb);
  }
  if (a.empty() && b.empty()) return 1.0;
  std::vector<CssEntry> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  const std::size_t union_size = a.size() + b.size() - common.size();
  return static_cast<double>(common.size()) / static_cast<double>(union_size);
}

}  // namespace docedit
