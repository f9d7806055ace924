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

#include "docedit/tree_edit_distance.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"

namespace docedit {
namespace {

using ::docedit::testing::CountNodes;
using ::docedit::testing::ForestDistanceOracle;
using ::docedit::testing::MappingOracle;
using ::docedit::testing::RandomTree;

DomNode N(std::string label, std::vector<DomNode> children = {}) {
  DomNode n;
  n.label = std::move(label);
  n.children = std::move(children);
  return n;
}

TEST(TreeEditDistanceTest, Identity) {
  const DomNode t = N("a", {N("b", {N("c")}), N("d")});
  EXPECT_EQ(TreeEditDistance(t, t), 0u);
}

TEST(TreeEditDistanceTest, SingleOperations) {
  const DomNode t = N("a", {N("b"), N("c")});
  EXPECT_EQ(TreeEditDistance(t, N("a", {N("b"), N("x")})), 1u);   // relabel
  EXPECT_EQ(TreeEditDistance(t, N("a", {N("b")})), 1u);           // delete leaf
  EXPECT_EQ(TreeEditDistance(t, N("a", {N("b"), N("c"), N("d")})), 1u);  // insert leaf
  // Deleting an inner node promotes its children.
  EXPECT_EQ(TreeEditDistance(N("a", {N("x", {N("b"), N("c")})}), t), 1u);
}

TEST(TreeEditDistanceTest, ClassicExample) {
  // The two six-node trees from the original algorithm description:
  // f(d(a c(b)) e) and f(c(d(a b)) e) are at distance 2.
  const DomNode t1 = N("f", {N("d", {N("a"), N("c", {N("b")})}), N("e")});
  const DomNode t2 = N("f", {N("c", {N("d", {N("a"), N("b")})}), N("e")});
  EXPECT_EQ(TreeEditDistance(t1, t2), 2u);
}

TEST(TreeEditDistanceTest, DisjointLabelsCostRelabelOrSize) {
  const DomNode a = N("a", {N("a"), N("a")});
  const DomNode b = N("b", {N("b")});
  EXPECT_EQ(TreeEditDistance(a, b), 3u);  // two relabels and one delete
}

TEST(TreeEditDistanceTest, OnParsedHtml) {
  EXPECT_EQ(TreeEditDistance(ParseHtml("<div><p>a</p><p>b</p></div>"),
                             ParseHtml("<div><p>a</p></div>")),
            2u);
  EXPECT_EQ(TreeEditDistance(ParseHtml("<div><p>a</p></div>"), ParseHtml("<div><p>b</p></div>")), 0u)
      << "text content is not part of the label";
}

TEST(TreeEditDistanceTest, OraclesAgreeWithEachOther) {
  std::mt19937 rng(17);
  for (int i = 0; i < 150; ++i) {
    std::uniform_int_distribution<int> size(1, 5);
    const DomNode a = RandomTree(rng, size(rng), 3);
    const DomNode b = RandomTree(rng, size(rng), 3);
    ForestDistanceOracle forest;
    MappingOracle mapping;
    EXPECT_EQ(forest.Trees(a, b), mapping.Trees(a, b));
  }
}

TEST(TreeEditDistanceTest, MatchesForestOracleOnRandomTrees) {
  std::mt19937 rng(2026);
  for (int i = 0; i < 400; ++i) {
    std::uniform_int_distribution<int> size(1, 7);
    std::uniform_int_distribution<int> labels(1, 3);
    const int k = labels(rng);
    const DomNode a = RandomTree(rng, size(rng), k);
    const DomNode b = RandomTree(rng, size(rng), k);
    ForestDistanceOracle oracle;
    ASSERT_EQ(TreeEditDistance(a, b), oracle.Trees(a, b));
  }
}

TEST(TreeEditDistancePropertyTest, MetricAxioms) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> size(1, 8);
  for (int i = 0; i < 200; ++i) {
    const DomNode a = RandomTree(rng, size(rng), 3);
    const DomNode b = RandomTree(rng, size(rng), 3);
    const DomNode c = RandomTree(rng, size(rng), 3);
    const std::size_t ab = TreeEditDistance(a, b);
    EXPECT_EQ(ab, TreeEditDistance(b, a));
    EXPECT_LE(TreeEditDistance(a, c), ab + TreeEditDistance(b, c));
    EXPECT_LE(ab, CountNodes(a) + CountNodes(b));
    EXPECT_EQ(TreeEditDistance(a, a), 0u);
  }
}

TEST(TreeEditDistanceTest, DeepTreeDoesNotOverflowStack) {
  DomNode deep = N("x");
  for (int i = 0; i < 20000; ++i) {
    DomNode parent = N("x");
    parent.children.push_back(std::move(deep));
    deep = std::move(parent);
  }
  DomNode leaf = N("x");
  EXPECT_EQ(TreeEditDistance(leaf, leaf), 0u);
  EXPECT_EQ(TreeEditDistance(N("x", {N("x")}), N("x")), 1u);
  // A chain against a single node costs one deletion per extra node.
  EXPECT_EQ(TreeEditDistance(deep, leaf), 20000u);
}

}  // namespace
}  // namespace docedit
