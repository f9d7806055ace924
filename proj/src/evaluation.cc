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

#include "docedit/evaluation.h"

#include <algorithm>
#include <exception>
#include <map>

#include "docedit/error.h"
#include "docedit/human_eval.h"
#include "docedit/io.h"
#include "docedit/seg_io.h"
#include "docedit/statistics.h"
#include "parallel.h"

namespace docedit {
namespace {

std::optional<double> PearsonOrNull(const std::vector<double>& xs, const std::vector<double>& ys) {
  try {
    return Pearson(xs, ys);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kConstantVector && e.code() != ErrorCode::kInvalidArgument) throw;
    return std::nullopt;
  }
}

}  // namespace

std::optional<CommandMetricsReport> EvaluateCommands(std::span<const EvalRecord> records) {
  std::vector<CommandPair> pairs;
  for (const EvalRecord& r : records) {
    if (r.has_command_pair()) pairs.emplace_back(*r.pred_command, *r.gold_command);
  }
  if (pairs.empty()) return std::nullopt;
  return CorpusCommandReport(pairs);
}

std::optional<BboxSummary> EvaluateBoxes(std::span<const EvalRecord> records,
                                         const EvaluationOptions& options,
                                         std::vector<RecordFailure>* failures) {
  std::vector<BoxPair> pairs;
  for (const EvalRecord& r : records) {
    if (!r.has_bbox_pair()) continue;
    try {
      BoundingBox pred = r.pred_bbox ? *r.pred_bbox : MaskToBox(LoadLabelMap(*r.pred_mask), options.mask);
      pairs.emplace_back(pred, *r.gold_bbox);
    } catch (const Error& e) {
      failures->push_back({r.id, "bbox", e.what()});
    }
  }
  if (pairs.empty()) return std::nullopt;
  BboxSummary out;
  out.n = pairs.size();
  out.top1_pct = Top1Accuracy(pairs, options.top1_threshold);
  for (const auto& [pred, gold] : pairs) out.mean_iou += BoxIou(pred, gold);
  out.mean_iou /= static_cast<double>(pairs.size());
  return out;
}

std::vector<HtmlRecordMetrics> CompareRecordHtml(std::span<const EvalRecord> records,
                                                 const EvaluationOptions& options,
                                                 std::vector<RecordFailure>* failures) {
  std::vector<const EvalRecord*> todo;
  for (const EvalRecord& r : records) {
    if (r.has_html_pair()) todo.push_back(&r);
  }
  std::vector<std::optional<HtmlPairMetrics>> results(todo.size());
  std::vector<std::string> errors(todo.size());
  internal::ParallelFor(todo.size(), options.workers, [&](std::size_t i) {
    try {
      results[i] = CompareHtml(ReadFile(*todo[i]->pred_html), ReadFile(*todo[i]->gold_html),
                               options.css);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  std::vector<HtmlRecordMetrics> out;
  for (std::size_t i = 0; i < todo.size(); ++i) {
    if (results[i]) {
      out.push_back({todo[i]->id, *results[i]});
    } else {
      failures->push_back({todo[i]->id, "html", errors[i]});
    }
  }
  return out;
}

std::optional<StructuralSummary> SummarizeHtml(std::span<const HtmlRecordMetrics> metrics) {
  if (metrics.empty()) return std::nullopt;
  StructuralSummary s;
  for (const HtmlRecordMetrics& m : metrics) {
    s.rouge_l += m.metrics.rouge_l;
    s.word_f1 += m.metrics.word_f1;
    s.tree_edit_distance_mean += static_cast<double>(m.metrics.tree_edit_distance);
    s.css_iou_mean += m.metrics.css_iou;
    s.skipped_css_declarations += m.metrics.skipped_css_declarations;
  }
  s.n = metrics.size();
  const double n = static_cast<double>(s.n);
  s.rouge_l /= n;
  s.word_f1 /= n;
  s.tree_edit_distance_mean /= n;
  s.css_iou_mean /= n;
  return s;
}

std::optional<CorrelationMatrix> CorrelateMetrics(std::span<const EvalRecord> records,
                                                  std::span<const HtmlRecordMetrics> metrics) {
  if (metrics.size() < 2) return std::nullopt;
  std::map<std::string, const EvalRecord*> by_id;
  for (const EvalRecord& r : records) by_id[r.id] = &r;

  CorrelationMatrix m;
  m.rows = {"Tree Edit Distance", "CSS IoU"};
  m.cols = {"SR", "CC", "EC", "Word Overlap F1", "ROUGE-L"};
  m.values.assign(m.rows.size(), std::vector<std::optional<double>>(m.cols.size()));
  m.col_n.assign(m.cols.size(), 0);

  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    std::vector<double> ted, css, other;
    for (const HtmlRecordMetrics& hm : metrics) {
      double value = 0;
      if (c < 3) {
        auto it = by_id.find(hm.id);
        if (it == by_id.end()) continue;
        const std::optional<RecordHumanMeans> h = HumanMeans(*it->second);
        if (!h) continue;
        value = c == 0 ? h->sr : c == 1 ? h->cc : h->ec;
      } else {
        value = c == 3 ? hm.metrics.word_f1 : hm.metrics.rouge_l;
      }
      ted.push_back(static_cast<double>(hm.metrics.tree_edit_distance));
      css.push_back(hm.metrics.css_iou);
      other.push_back(value);
    }
    m.col_n[c] = other.size();
    m.values[0][c] = PearsonOrNull(ted, other);
    m.values[1][c] = PearsonOrNull(css, other);
  }
  return m;
}

Report EvaluateAll(std::span<const EvalRecord> records, const EvaluationOptions& options) {
  Report report;
  report.command_metrics = EvaluateCommands(records);
  report.bbox = EvaluateBoxes(records, options, &report.failures);
  const std::vector<HtmlRecordMetrics> html = CompareRecordHtml(records, options, &report.failures);
  report.structural = SummarizeHtml(html);
  report.correlations = CorrelateMetrics(records, html);
  const bool any_human = std::any_of(records.begin(), records.end(),
                                     [](const EvalRecord& r) { return !r.human_scores.empty(); });
  if (any_human) {
    report.human = AggregateHumanEval(records);
    report.agreement = PooledAgreement(records);
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const RecordFailure& a, const RecordFailure& b) {
              return a.id != b.id ? a.id < b.id : a.stage < b.stage;
            });
  return report;
}

}  // namespace docedit
