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

#include "docedit/structure_metrics.h"

#include "docedit/html.h"
#include "docedit/text_metrics.h"
#include "docedit/tree_edit_distance.h"

namespace docedit {

HtmlPairMetrics CompareHtml(std::string_view pred_html, std::string_view gold_html,
                            CssIouOptions css_options) {
  const DomTree pred = ParseHtml(pred_html);
  const DomTree gold = ParseHtml(gold_html);

  HtmlPairMetrics metrics;
  const TokenSeq pred_tokens = Tokenize(VisibleText(pred));
  const TokenSeq gold_tokens = Tokenize(VisibleText(gold));
  metrics.rouge_l = RougeL(pred_tokens, gold_tokens);
  metrics.word_f1 = WordOverlapF1(pred_tokens, gold_tokens);
  metrics.tree_edit_distance = TreeEditDistance(pred, gold);

  const CssExtraction pred_css = ExtractCss(pred);
  const CssExtraction gold_css = ExtractCss(gold);
  metrics.css_iou = CssIou(pred_css.pairs, gold_css.pairs, css_options);
  metrics.skipped_css_declarations =
      pred_css.skipped_declarations + gold_css.skipped_declarations;
  return metrics;
}

}  // namespace docedit
