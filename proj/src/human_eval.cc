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

#include "docedit/human_eval.h"

#include <algorithm>
#include <vector>

#include "docedit/error.h"
#include "docedit/statistics.h"

namespace docedit {
namespace {

std::optional<double> KappaOrNull(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty()) return std::nullopt;
  try {
    return CohensKappa(a, b);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateMarginals) throw;
    return std::nullopt;
  }
}

}  // namespace

double TotalFromPercentages(double sr_pct, double ec_pct, double cc_pct) {
  return (sr_pct + ec_pct + cc_pct) / 3.0;
}

std::optional<RecordHumanMeans> HumanMeans(const EvalRecord& record) {
  if (record.human_scores.empty()) return std::nullopt;
  RecordHumanMeans m;
  for (const HumanScore& s : record.human_scores) {
    m.sr += s.sr;
    m.ec += s.ec;
    m.cc += s.cc;
  }
  const double k = static_cast<double>(record.human_scores.size());
  m.sr /= k;
  m.ec /= k;
  m.cc /= k;
  return m;
}

HumanEvalSummary AggregateHumanEval(std::span<const EvalRecord> records) {
  HumanEvalSummary out;
  for (const EvalRecord& r : records) {
    const std::optional<RecordHumanMeans> m = HumanMeans(r);
    if (!m) continue;
    out.sr_pct += m->sr;
    out.ec_pct += m->ec;
    out.cc_pct += m->cc;
    ++out.n;
  }
  if (out.n == 0) throw Error(ErrorCode::kNoHumanScores, "no record carries human scores");
  const double n = static_cast<double>(out.n);
  out.sr_pct = 100.0 * out.sr_pct / n;
  out.ec_pct = 100.0 * out.ec_pct / n;
  out.cc_pct = 100.0 * out.cc_pct / n;
  out.total_pct = TotalFromPercentages(out.sr_pct, out.ec_pct, out.cc_pct);
  return out;
}

AgreementSummary PooledAgreement(std::span<const EvalRecord> records) {
  std::vector<int> sr_a, sr_b, ec_a, ec_b, cc_a, cc_b;
  for (const EvalRecord& r : records) {
    std::vector<const HumanScore*> scores;
    for (const HumanScore& s : r.human_scores) scores.push_back(&s);
    std::sort(scores.begin(), scores.end(),
              [](const HumanScore* a, const HumanScore* b) { return a->evaluator < b->evaluator; });
    for (std::size_t i = 0; i < scores.size(); ++i) {
      for (std::size_t j = i + 1; j < scores.size(); ++j) {
        sr_a.push_back(scores[i]->sr);
        sr_b.push_back(scores[j]->sr);
        ec_a.push_back(scores[i]->ec);
        ec_b.push_back(scores[j]->ec);
        cc_a.push_back(scores[i]->cc);
        cc_b.push_back(scores[j]->cc);
      }
    }
  }
  AgreementSummary out;
  out.pairs = sr_a.size();
  out.sr = KappaOrNull(sr_a, sr_b);
  out.ec = KappaOrNull(ec_a, ec_b);
  out.cc = KappaOrNull(cc_a, cc_b);
  return out;
}

}  // namespace docedit
