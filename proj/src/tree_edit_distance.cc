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

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

namespace docedit {
namespace {

// Postorder view of a tree: node i (0-based) has label id labels[i] and
// leftmost leaf descendant leftmost[i].
struct PostorderTree {
  std::vector<int> labels;
  std::vector<int> leftmost;
  std::vector<int> keyroots;
};

class LabelInterner {
 public:
  int Intern(const std::string& label) {
    auto [it, inserted] = ids_.emplace(label, static_cast<int>(ids_.size()));
    return it->second;
  }

 private:
  std::unordered_map<std::string, int> ids_;
};

// Iterative postorder so that deep documents cannot overflow the stack.
PostorderTree Flatten(const DomNode& root, LabelInterner* interner) {
  PostorderTree tree;
  struct Frame {
    const DomNode* node;
    std::size_t next_child;
    int leftmost;
  };
  std::vector<Frame> stack;
  stack.push_back({&root, 0, -1});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_child < top.node->children.size()) {
      const DomNode* child = &top.node->children[top.next_child++];
      stack.push_back({child, 0, -1});
      continue;
    }
    const int index = static_cast<int>(tree.labels.size());
    const int leftmost = top.leftmost >= 0 ? top.leftmost : index;
    tree.labels.push_back(interner->Intern(top.node->label));
    tree.leftmost.push_back(leftmost);
    stack.pop_back();
    // The first finished child fixes the parent's leftmost leaf.
    if (!stack.empty() && stack.back().leftmost < 0) stack.back().leftmost = leftmost;
  }

  // Keyroots: for each distinct leftmost leaf, the highest node sharing it.
  const int n = static_cast<int>(tree.labels.size());
  std::vector<int> highest(n, -1);
  for (int i = 0; i < n; ++i) highest[tree.leftmost[i]] = i;
  for (int i = 0; i < n; ++i) {
    if (highest[i] >= 0) tree.keyroots.push_back(highest[i]);
  }
  std::sort(tree.keyroots.begin(), tree.keyroots.end());
  return tree;
}

}  // namespace

std::size_t TreeEditDistance(const DomNode& a, const DomNode& b) {
  LabelInterner interner;
  const PostorderTree t1 = Flatten(a, &interner);
  const PostorderTree t2 = Flatten(b, &interner);
  const int n = static_cast<int>(t1.labels.size());
  const int m = static_cast<int>(t2.labels.size());

  std::vector<int> treedist(static_cast<std::size_t>(n) * m, 0);
  auto td = [&](int i, int j) -> int& { return treedist[static_cast<std::size_t>(i) * m + j]; };
  // forest[x][y] over the 1-based offsets within the current keyroot pair.
  std::vector<int> forest(static_cast<std::size_t>(n + 1) * (m + 1), 0);
  const int stride = m + 1;

  for (int i : t1.keyroots) {
    for (int j : t2.keyroots) {
      const int li = t1.leftmost[i];
      const int lj = t2.leftmost[j];
      const int rows = i - li + 2;
      const int cols = j - lj + 2;
      auto fd = [&](int x, int y) -> int& { return forest[static_cast<std::size_t>(x) * stride + y]; };

      fd(0, 0) = 0;
      for (int x = 1; x < rows; ++x) fd(x, 0) = fd(x - 1, 0) + 1;
      for (int y = 1; y < cols; ++y) fd(0, y) = fd(0, y - 1) + 1;

      for (int x = 1; x < rows; ++x) {
        const int i1 = li + x - 1;
        for (int y = 1; y < cols; ++y) {
          const int j1 = lj + y - 1;
          const int del = fd(x - 1, y) + 1;
          const int ins = fd(x, y - 1) + 1;
          if (t1.leftmost[i1] == li && t2.leftmost[j1] == lj) {
            const int relabel = fd(x - 1, y - 1) + (t1.labels[i1] == t2.labels[j1] ? 0 : 1);
            fd(x, y) = std::min({del, ins, relabel});
            td(i1, j1) = fd(x, y);
          } else {
            const int px = t1.leftmost[i1] - li;
            const int py = t2.leftmost[j1] - lj;
            fd(x, y) = std::min({del, ins, fd(px, py) + td(i1, j1)});
          }
        }
      }
    }
  }
  return static_cast<std::size_t>(td(n - 1, m - 1));
}

}  // namespace docedit
