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

#ifndef DOCEDIT_STRUCTURE_METRICS_H_
#define DOCEDIT_STRUCTURE_METRICS_H_

#include <cstddef>
#include <string_view>

#include "docedit/css.h"

namespace docedit {

// Whole-document comparison of an edited page against its reference.
struct HtmlPairMetrics {
  double rouge_l = 0;
  double word_f1 = 0;
  std::size_t tree_edit_distance = 0;
  double css_iou = 0;
  std::size_t skipped_css_declarations = 0;
};

// ROUGE-L and word F1 run over the visible text of each document.
// Throws Error(kEmptyDocument) if either side has no element.
HtmlPairMetrics CompareHtml(std::string_view pred_html, std::string_view gold_html,
                            CssIouOptions css_options = {});

}  // namespace docedit

#endif  // DOCEDIT_STRUCTURE_METRICS_H_
