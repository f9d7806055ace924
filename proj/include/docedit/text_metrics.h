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

#ifndef DOCEDIT_TEXT_METRICS_H_
#define DOCEDIT_TEXT_METRICS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "docedit/command.h"

namespace docedit {

// Lowercase word tokens with surrounding punctuation removed. Only Tokenize
// produces these, so no token is empty.
class TokenSeq {
 public:
  TokenSeq() = default;

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  friend bool operator==(const TokenSeq&, const TokenSeq&) = default;
  friend TokenSeq Tokenize(std::string_view text);

 private:
  std::vector<std::string> tokens_;
};

TokenSeq Tokenize(std::string_view text);

bool ExactMatch(const EditCommand& pred, const EditCommand& gold);

// Multiset overlap F1. Both empty -> 1, exactly one empty or no overlap -> 0.
double WordOverlapF1(const TokenSeq& pred, const TokenSeq& gold);

std::size_t LcsLength(const TokenSeq& a, const TokenSeq& b);

// LCS-based F1 (beta = 1), same empty-input conventions as WordOverlapF1.
double RougeL(const TokenSeq& pred, const TokenSeq& gold);

using CommandPair = std::pair<EditCommand, EditCommand>;  // (pred, gold)

struct FieldAccuracy {
  double action_pct = 0;
  double component_pct = 0;
};

// Throws Error(kEmptyCorpus) for an empty list.
FieldAccuracy ComputeFieldAccuracy(std::span<const CommandPair> pairs);

struct CommandMetricsReport {
  double exact_match_pct = 0;
  double word_overlap_f1 = 0;
  double rouge_l = 0;
  double action_pct = 0;
  double component_pct = 0;
  std::size_t n = 0;

  friend bool operator==(const CommandMetricsReport&, const CommandMetricsReport&) = default;
};

// Per-pair metrics averaged over the corpus. F1 and ROUGE-L are computed on
// the canonical serialized commands and macro-averaged.
CommandMetricsReport CorpusCommandReport(std::span<const CommandPair> pairs);

}  // namespace docedit

#endif  // DOCEDIT_TEXT_METRICS_H_
