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

#include <gtest/gtest.h>

#include <functional>

#include "docedit/error.h"

namespace docedit {
namespace {

// Compact bracket notation: label(child child ...), text as "#text".
std::string Shape(const DomNode& n) {
  std::string s = n.label;
  if (!n.children.empty()) {
    s += "(";
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i) s += " ";
      s += Shape(n.children[i]);
    }
    s += ")";
  }
  return s;
}

std::string Shape(std::string_view html) { return Shape(ParseHtml(html).root); }

void ForEachNode(const DomNode& n, const std::function<void(const DomNode&)>& fn) {
  fn(n);
  for (const DomNode& c : n.children) ForEachNode(c, fn);
}

TEST(ParseHtmlTest, SimpleDocument) {
  EXPECT_EQ(Shape("<html><body><p>Hi</p></body></html>"), "html(body(p(#text)))");
}

TEST(ParseHtmlTest, LabelsAreLowercase) {
  EXPECT_EQ(Shape("<DIV><SPAN>x</SPAN></DIV>"), "div(span(#text))");
}

TEST(ParseHtmlTest, WhitespaceOnlyTextIsDropped) {
  EXPECT_EQ(Shape("<ul>\n  <li>a</li>\n  <li>b</li>\n</ul>"), "ul(li(#text) li(#text))");
}

TEST(ParseHtmlTest, ImpliedEndTags) {
  EXPECT_EQ(Shape("<ul><li>a<li>b</ul>"), "ul(li(#text) li(#text))");
  EXPECT_EQ(Shape("<div><p>one<p>two</div>"), "div(p(#text) p(#text))");
  EXPECT_EQ(Shape("<table><tr><td>a<td>b<tr><td>c</table>"),
            "table(tr(td(#text) td(#text)) tr(td(#text)))");
  EXPECT_EQ(Shape("<dl><dt>t<dd>d<dt>u</dl>"), "dl(dt(#text) dd(#text) dt(#text))");
}

TEST(ParseHtmlTest, StrayEndTagsAreIgnored) {
  EXPECT_EQ(Shape("<div>a</span></div>"), "div(#text)");
}

TEST(ParseHtmlTest, UnclosedElementsCloseAtEnd) {
  EXPECT_EQ(Shape("<div><b>bold"), "div(b(#text))");
}

TEST(ParseHtmlTest, VoidAndSelfClosingElements) {
  EXPECT_EQ(Shape("<p>a<br>b<img src=x></p>"), "p(#text br #text img)");
  EXPECT_EQ(Shape("<svg><path d=\"M0\"/><path/></svg>"), "svg(path path)");
}

TEST(ParseHtmlTest, CommentsAndDoctypeProduceNoNodes) {
  EXPECT_EQ(Shape("<!DOCTYPE html><!-- c --><html><body><!--x-->t</body></html>"),
            "html(body(#text))");
}

TEST(ParseHtmlTest, SeveralTopLevelNodesGetSyntheticRoot) {
  EXPECT_EQ(Shape("<p>a</p><p>b</p>"), "#document(p(#text) p(#text))");
}

TEST(ParseHtmlTest, AttributesAndEntities) {
  const DomTree t = ParseHtml("<a HREF='x?a=1&amp;b=2' title=\"&lt;t&gt;\" hidden>A&nbsp;&#66;&#x43;</a>");
  ASSERT_EQ(t.root.label, "a");
  ASSERT_NE(t.root.FindAttribute("href"), nullptr);
  EXPECT_EQ(*t.root.FindAttribute("href"), "x?a=1&b=2");
  EXPECT_EQ(*t.root.FindAttribute("title"), "<t>");
  ASSERT_NE(t.root.FindAttribute("hidden"), nullptr);
  EXPECT_EQ(*t.root.FindAttribute("hidden"), "");
  ASSERT_EQ(t.root.children.size(), 1u);
  EXPECT_EQ(t.root.children[0].text, "A BC");
}

TEST(ParseHtmlTest, StyleKeepsRawTextScriptIsDropped) {
  const DomTree t = ParseHtml("<head><style>p > a { color: red }</style><script>if (a<b) {}</script></head>");
  ASSERT_EQ(Shape(t.root), "head(style script)");
  EXPECT_EQ(t.root.children[0].text, "p > a { color: red }");
}

TEST(ParseHtmlTest, EmptyInputThrows) {
  EXPECT_THROW(ParseHtml(""), Error);
  EXPECT_THROW(ParseHtml("   \n"), Error);
  EXPECT_THROW(ParseHtml("<!-- only a comment -->"), Error);
  EXPECT_THROW(ParseHtml("<<<>>> text without elements"), Error);
}

TEST(ParseHtmlTest, InvariantsOnMessyInput) {
  const char* inputs[] = {
      "<div <p>>>",        "<table><td>x</table></div>",
      "</p>text<p",        "<a b=\"unterminated>x", "<ul><li><ul><li>deep</ul></ul>",
      "<p>one</p>\n\n<p>", "<b><i>x</b></i>",
  };
  for (const char* in : inputs) {
    const DomTree t = ParseHtml(in);
    ForEachNode(t.root, [&](const DomNode& n) {
      EXPECT_FALSE(n.label.empty()) << in;
      for (char c : n.label) EXPECT_FALSE(c >= 'A' && c <= 'Z') << in;
      if (n.is_text()) {
        EXPECT_TRUE(n.children.empty());
        EXPECT_NE(n.text.find_first_not_of(" \t\r\n\f"), std::string::npos) << in;
      }
    });
  }
}

TEST(SerializeHtmlTest, ReparsesToSameTree) {
  const char* inputs[] = {
      "<html><head><style>.a{color:red}</style></head><body><p class=\"x\">a &amp; b</p></body></html>",
      "<ul><li>a<li>b</ul>",
      "<p>a<br>b</p><p title='q\"uote'>c</p>",
  };
  for (const char* in : inputs) {
    const DomTree t = ParseHtml(in);
    EXPECT_EQ(ParseHtml(SerializeHtml(t)), t) << in;
  }
}

TEST(VisibleTextTest, SkipsStyleAndScript) {
  EXPECT_EQ(VisibleText(ParseHtml(
                "<html><head><title>T</title><style>p{}</style></head><body><h1>Big</h1><p>small "
                "text</p><script>x()</script></body></html>")),
            "T Big small text");
}

}  // namespace
}  // namespace docedit
