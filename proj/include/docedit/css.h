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

#ifndef DOCEDIT_CSS_H_
#define DOCEDIT_CSS_H_

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>

#include "docedit/html.h"

namespace docedit {

inline constexpr std::string_view kInlineScope = "inline";

struct CssEntry {
  std::string scope;     // selector, or "inline" for style attributes
  std::string property;  // lowercase, whitespace-collapsed
  std::string value;     // lowercase, whitespace-collapsed

  friend auto operator<=>(const CssEntry&, const CssEntry&) = default;
};

using CssPairSet = std::set<CssEntry>;

struct CssExtraction {
  CssPairSet pairs;
  std::size_t skipped_declarations = 0;
};

// Adds the rules of one stylesheet. Selector lists are split so that
// `h1, h2 { color: red }` yields one entry per selector. Rules nested in
// at-rule blocks are scoped as "<at-rule prelude> <selector>".
void ParseStylesheet(std::string_view css, CssExtraction* out);

// Adds the declarations of one `p: v; ...` block under `scope`.
void ParseDeclarations(std::string_view block, std::string_view scope, CssExtraction* out);

// Internal <style> rules plus inline style attributes. Linked stylesheets
// are ignored.
CssExtraction ExtractCss(const DomTree& tree);

// Same, starting from markup. Input without any element yields an empty set.
CssExtraction ExtractCss(std::string_view html);

struct CssIouOptions {
  // When false, entries are compared as bare (property, value) pairs.
  bool keep_scope = true;
};

// |a ∩ b| / |a ∪ b|; 1 when both are empty.
double CssIou(const CssPairSet& a, const CssPairSet& b, CssIouOptions options = {});

}  // namespace docedit

#endif  // DOCEDIT_CSS_H_
