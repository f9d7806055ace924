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

// Human-judgement aggregation. Each record's binary SR/CC/EC votes are
// averaged over its evaluators, then over records; the total is the mean
// of the three corpus percentages, i.e. the per-document 0..3 sum
// rescaled to a percentage.

#ifndef DOCEDIT_HUMAN_EVAL_H_
#define DOCEDIT_HUMAN_EVAL_H_

#include <cstddef>
#include <optional>
#include <span>

#include "docedit/dataset.h"

namespace docedit {

struct HumanEvalSummary {
  double sr_pct = 0;
  double ec_pct = 0;
  double cc_pct = 0;
  double total_pct = 0;
  std::size_t n = 0;  // records with at least one evaluator

  friend bool operator==(const HumanEvalSummary&, const HumanEvalSummary&) = default;
};

double TotalFromPercentages(double sr_pct, double ec_pct, double cc_pct);

// Records without human scores are skipped.
// Throws Error(kNoHumanScores) when no record has any.
HumanEvalSummary AggregateHumanEval(std::span<const EvalRecord> records);

// Per-record evaluator means in [0, 1]; nullopt without scores.
struct RecordHumanMeans {
  double sr = 0;
  double ec = 0;
  double cc = 0;
};
std::optional<RecordHumanMeans> HumanMeans(const EvalRecord& record);

// Kappa per metric over decisions pooled across every record and every
// pair of evaluators that scored it. Pairs are formed in evaluator-name
// order. nullopt marks a metric whose kappa is undefined (no pairs, or
// degenerate marginals).
struct AgreementSummary {
  std::optional<double> sr;
  std::optional<double> ec;
  std::optional<double> cc;
  std::size_t pairs = 0;

  friend bool operator==(const AgreementSummary&, const AgreementSummary&) = default;
};
AgreementSummary PooledAgreement(std::span<const EvalRecord> records);

}  // namespace docedit

#endif  // DOCEDIT_HUMAN_EVAL_H_
