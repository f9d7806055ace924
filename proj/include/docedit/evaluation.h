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

// Corpus-level evaluation over EvalRecords. Each evaluator looks only at
// records carrying its pred/gold pair; a record whose inputs cannot be read
// or parsed becomes a RecordFailure instead of aborting the corpus.

#ifndef DOCEDIT_EVALUATION_H_
#define DOCEDIT_EVALUATION_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "docedit/css.h"
#include "docedit/dataset.h"
#include "docedit/grounding.h"
#include "docedit/report.h"
#include "docedit/structure_metrics.h"

namespace docedit {

struct EvaluationOptions {
  CssIouOptions css;
  MaskToBoxOptions mask;
  double top1_threshold = kTop1Threshold;
  int workers = 4;
};

std::optional<CommandMetricsReport> EvaluateCommands(std::span<const EvalRecord> records);

// Uses pred_bbox, or derives it from pred_mask when only the mask is given.
std::optional<BboxSummary> EvaluateBoxes(std::span<const EvalRecord> records,
                                         const EvaluationOptions& options,
                                         std::vector<RecordFailure>* failures);

struct HtmlRecordMetrics {
  std::string id;
  HtmlPairMetrics metrics;
};

// Results in record order regardless of worker scheduling.
std::vector<HtmlRecordMetrics> CompareRecordHtml(std::span<const EvalRecord> records,
                                                 const EvaluationOptions& options,
                                                 std::vector<RecordFailure>* failures);

std::optional<StructuralSummary> SummarizeHtml(std::span<const HtmlRecordMetrics> metrics);

// Tree Edit Distance and CSS IoU against SR / CC / EC evaluator means and
// against document-level Word Overlap F1 and ROUGE-L.
std::optional<CorrelationMatrix> CorrelateMetrics(std::span<const EvalRecord> records,
                                                  std::span<const HtmlRecordMetrics> metrics);

// Every section whose inputs are present. Failures are sorted by id.
Report EvaluateAll(std::span<const EvalRecord> records, const EvaluationOptions& options = {});

}  // namespace docedit

#endif  // DOCEDIT_EVALUATION_H_
