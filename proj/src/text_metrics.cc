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

#include "docedit/text_metrics.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "docedit/error.h"
#include "docedit/strings.h"

namespace docedit {
namespace {

bool IsAsciiPunct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= 0x21 && u <= 0x2f) || (u >= 0x3a && u <= 0x40) || (u >= 0x5b && u <= 0x60) ||
         (u >= 0x7b && u <= 0x7e);
}

double F1FromCounts(std::size_t overlap, std::size_t pred_len, std::size_t gold_len) {
  if (pred_len == 0 && gold_len == 0) return 1.0;
  if (pred_len == 0 || gold_len == 0 || overlap == 0) return 0.0;
  const double precision = static_cast<double>(overlap) / static_cast<double>(pred_len);
  const double recall = static_cast<double>(overlap) / static_cast<double>(gold_len);
  return 2.0 * precision * recall / (precision + recall);
}

}  // namespace

TokenSeq Tokenize(std::string_view text) {
  TokenSeq seq;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !IsAsciiSpace(text[j])) ++j;
    std::string_view word = text.substr(i, j - i);
    while (!word.empty() && IsAsciiPunct(word.front())) word.remove_prefix(1);
    while (!word.empty() && IsAsciiPunct(word.back())) word.remove_suffix(1);
    if (!word.empty()) seq.tokens_.push_back(AsciiLower(word));
    i = j;
  }
  return seq;
}

bool ExactMatch(const EditCommand& pred, const EditCommand& gold) {
  return NormalizeCommand(pred) == NormalizeCommand(gold);
}

double WordOverlapF1(const TokenSeq& pred, const TokenSeq& gold) {
  std::unordered_map<std::string_view, std::size_t> gold_counts;
  for (const std::string& t : gold.tokens()) ++gold_counts[t];
  std::size_t overlap = 0;
  for (const std::string& t : pred.tokens()) {
    auto it = gold_counts.find(t);
    if (it != gold_counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  return F1FromCounts(overlap, pred.size(), gold.size());
}

// Bit-parallel LCS: one bit per position of `a`, one pass per token of `b`.
std::size_t LcsLength(const TokenSeq& a, const TokenSeq& b) {
  const std::size_t n = a.size();
  if (n == 0 || b.empty()) return 0;
  const std::size_t words = (n + 63) / 64;

  std::unordered_map<std::string_view, std::vector<std::uint64_t>> match;
  for (std::size_t i = 0; i < n; ++i) {
    auto& mask = match[a.tokens()[i]];
    if (mask.empty()) mask.assign(words, 0);
    mask[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  std::vector<std::uint64_t> v(words, ~std::uint64_t{0});
  for (const std::string& token : b.tokens()) {
    auto it = match.find(token);
    if (it == match.end()) continue;
    const std::vector<std::uint64_t>& m = it->second;
    std::uint64_t carry = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t u = v[w] & m[w];
      const std::uint64_t sum = v[w] + u;
      const std::uint64_t with_carry = sum + carry;
      const std::uint64_t next_carry =
          static_cast<std::uint64_t>(sum < v[w]) | static_cast<std::uint64_t>(with_carry < sum);
      v[w] = with_carry | (v[w] & ~m[w]);
      carry = next_carry;
    }
  }

  std::size_t ones = 0;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t word = v[w];
    const std::size_t valid = std::min<std::size_t>(64, n - w * 64);
    if (valid < 64) word &= (std::uint64_t{1} << valid) - 1;
    ones += static_cast<std::size_t>(std::popcount(word));
  }
  return n - ones;
}

double RougeL(const TokenSeq& pred, const TokenSeq& gold) {
  return F1FromCounts(LcsLength(pred, gold), pred.size(), gold.size());
}

FieldAccuracy ComputeFieldAccuracy(std::span<const CommandPair> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyCorpus, "no command pairs");
  std::size_t action_hits = 0;
  std::size_t component_hits = 0;
  for (const auto& [pred, gold] : pairs) {
    if (pred.action == gold.action) ++action_hits;
    if (NormalizeField(pred.component) == NormalizeField(gold.component)) ++component_hits;
  }
  const double n = static_cast<double>(pairs.size());
  return {100.0 * static_cast<double>(action_hits) / n,
          100.0 * static_cast<double>(component_hits) / n};
}

CommandMetricsReport CorpusCommandReport(std::span<const CommandPair> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyCorpus, "no command pairs");
  CommandMetricsReport report;
  report.n = pairs.size();
  std::size_t exact = 0;
  double f1_sum = 0;
  double rouge_sum = 0;
  for (const auto& [pred, gold] : pairs) {
    if (ExactMatch(pred, gold)) ++exact;
    const TokenSeq p = Tokenize(SerializeCommand(pred));
    const TokenSeq g = Tokenize(SerializeCommand(gold));
    f1_sum += WordOverlapF1(p, g);
    rouge_sum += RougeL(p, g);
  }
  const double n = static_cast<double>(pairs.size());
  const FieldAccuracy fields = ComputeFieldAccuracy(pairs);
  report.exact_match_pct = 100.0 * static_cast<double>(exact) / n;
  report.word_overlap_f1 = f1_sum / n;
  report.rouge_l = rouge_sum / n;
  report.action_pct = fields.action_pct;
  report.component_pct = fields.component_pct;
  return report;
}

}  // namespace docedit
