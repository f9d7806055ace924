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

// JSONL evaluation corpus. One object per line:
//
//   {"id": "doc-17", "user_request": "...",
//    "pred_command": "modify(text, \"1, 2000\", \"11, 2000\")",
//    "gold_command": "...",
//    "pred_bbox": {"x": 10, "y": 20, "h": 30, "w": 40}, "gold_bbox": {...},
//    "pred_mask": "masks/doc-17.png",
//    "pred_html": "out/doc-17/edited.html", "gold_html": "gold/doc-17.html",
//    "image": "pages/doc-17.png",
//    "human_scores": [{"evaluator": "r1", "sr": 1, "cc": 0, "ec": 1, "star": 0}]}
//
// Relative paths resolve against the dataset file's directory. Blank lines
// are skipped; unknown keys are ignored.

#ifndef DOCEDIT_DATASET_H_
#define DOCEDIT_DATASET_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "docedit/command.h"
#include "docedit/grounding.h"

namespace docedit {

struct HumanScore {
  std::string evaluator;
  int sr = 0;  // style replication
  int cc = 0;  // content replication
  int ec = 0;  // edit correctness
  int star = 0;

  friend bool operator==(const HumanScore&, const HumanScore&) = default;
};

struct EvalRecord {
  std::string id;
  std::string user_request;
  std::optional<EditCommand> pred_command;
  std::optional<EditCommand> gold_command;
  std::optional<BoundingBox> pred_bbox;
  std::optional<BoundingBox> gold_bbox;
  std::optional<std::filesystem::path> pred_mask;
  std::optional<std::filesystem::path> pred_html;
  std::optional<std::filesystem::path> gold_html;
  std::optional<std::filesystem::path> image;
  std::vector<HumanScore> human_scores;

  bool has_command_pair() const { return pred_command && gold_command; }
  bool has_bbox_pair() const { return (pred_bbox || pred_mask) && gold_bbox; }
  bool has_html_pair() const { return pred_html && gold_html; }
};

struct DatasetIssue {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct Dataset {
  std::vector<EvalRecord> records;  // file order
  std::vector<DatasetIssue> issues;
};

// Parses one JSONL line. A record must carry at least one pred/gold pair,
// the inputs of a pipeline stage (image plus command or request), or human
// scores. Throws Error(kSchemaError) describing the first problem.
EvalRecord ParseEvalRecord(std::string_view line, const std::filesystem::path& base_dir);

// Malformed lines land in Dataset::issues. Throws Error(kSchemaError) for a
// duplicate id or when no line yields a record, Error(kIoError) when the
// file cannot be read.
Dataset ParseDataset(std::string_view text, const std::filesystem::path& base_dir);
Dataset LoadDataset(const std::filesystem::path& path);

}  // namespace docedit

#endif  // DOCEDIT_DATASET_H_
