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

#ifndef DOCEDIT_TREE_EDIT_DISTANCE_H_
#define DOCEDIT_TREE_EDIT_DISTANCE_H_

#include <cstddef>

#include "docedit/html.h"

namespace docedit {

// Ordered tree edit distance with unit insert/delete/relabel costs
// (Zhang & Shasha 1989). Only node labels are compared; attributes and
// text content are ignored. O(|a|·|b|) memory, scratch is per call.
std::size_t TreeEditDistance(const DomNode& a, const DomNode& b);

inline std::size_t TreeEditDistance(const DomTree& a, const DomTree& b) {
  return TreeEditDistance(a.root, b.root);
}

}  // namespace docedit

#endif  // DOCEDIT_TREE_EDIT_DISTANCE_H_
