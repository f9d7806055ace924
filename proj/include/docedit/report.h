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

// Aggregated evaluation results and their JSON / CSV / Markdown renderings.
// Column order follows the reference result tables: command generation,
// grounding, document editing, human evaluation. Output bytes depend only
// on the Report value.

#ifndef DOCEDIT_REPORT_H_
#define DOCEDIT_REPORT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "docedit/human_eval.h"
#include "docedit/text_metrics.h"

namespace docedit {

struct BboxSummary {
  double top1_pct = 0;
  double mean_iou = 0;
  std::size_t n = 0;

  friend bool operator==(const BboxSummary&, const BboxSummary&) = default;
};

struct StructuralSummary {
  double rouge_l = 0;
  double word_f1 = 0;
  double tree_edit_distance_mean = 0;
  double css_iou_mean = 0;
  std::size_t n = 0;
  std::size_t skipped_css_declarations = 0;

  friend bool operator==(const StructuralSummary&, const StructuralSummary&) = default;
};

// Pearson coefficients, rows x cols. A cell is nullopt when a vector was
// constant or had fewer than two points; col_n holds the points per column.
struct CorrelationMatrix {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<std::optional<double>>> values;
  std::vector<std::size_t> col_n;

  friend bool operator==(const CorrelationMatrix&, const CorrelationMatrix&) = default;
};

struct RecordFailure {
  std::string id;
  std::string stage;
  std::string message;

  friend bool operator==(const RecordFailure&, const RecordFailure&) = default;
};

struct Report {
  std::optional<CommandMetricsReport> command_metrics;
  std::optional<BboxSummary> bbox;
  std::optional<StructuralSummary> structural;
  std::optional<HumanEvalSummary> human;
  std::optional<AgreementSummary> agreement;
  std::optional<CorrelationMatrix> correlations;
  std::vector<RecordFailure> failures;  // sorted by (id, stage)

  friend bool operator==(const Report&, const Report&) = default;
};

enum class ReportFormat { kJson, kCsv, kMarkdown };

// Accepts json, csv, markdown / md. Throws Error(kInvalidArgument).
ReportFormat ParseReportFormat(std::string_view name);

std::string EmitReport(const Report& report, ReportFormat format);

// Inverse of EmitReport(.., kJson). Throws Error(kSchemaError).
Report ParseReportJson(std::string_view text);

}  // namespace docedit

#endif  // DOCEDIT_REPORT_H_
