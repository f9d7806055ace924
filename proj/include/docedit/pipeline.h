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

// Batch runner for the model-facing stages. Per record id it writes, under
// out_dir/<id>/:
//
//   reformulation_prompt.txt, reformulation_response.txt   (reformulation on)
//   instruction.txt                                        (edit)
//   marked.png                                             (box overlay drawn)
//   prompt.txt, response.txt, edited.html
//   error.txt                                              (record failed)
//
// Every file is written atomically. A record whose edited.html already
// exists is skipped, so an interrupted batch can be rerun in place.

#ifndef DOCEDIT_PIPELINE_H_
#define DOCEDIT_PIPELINE_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "docedit/backend.h"
#include "docedit/dataset.h"
#include "docedit/error.h"
#include "docedit/prompts.h"
#include "docedit/render.h"

namespace docedit {

struct PipelineFlags {
  bool use_grounding = true;      // draw the predicted box and add the focus clause
  bool use_reformulation = true;  // rewrite the command through the model first
};

enum class PipelineTask {
  kReformulate,  // stop after instruction.txt
  kEdit,         // full editing pipeline
  kReplicate,    // image-to-HTML of the record image
};

struct PipelineOptions {
  PipelineTask task = PipelineTask::kEdit;
  PipelineFlags flags;
  std::filesystem::path out_dir = "out";
  int workers = 4;
  PromptParams params;
  TemplateSet templates = TemplateSet::Defaults();
  MarkStyle marks;
};

enum class RecordStatus { kCompleted, kSkipped, kFailed };

struct RecordOutcome {
  std::string id;
  RecordStatus status = RecordStatus::kCompleted;
  std::optional<ErrorCode> error_code;
  std::string error;
};

struct PipelineSummary {
  std::vector<RecordOutcome> outcomes;  // record order
  std::size_t completed = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
};

// The instruction handed to the editing prompt when reformulation is off:
// the predicted command in FormatCommand form, else the raw request.
// Throws Error(kInvalidArgument) when the record has neither.
std::string DirectInstruction(const EvalRecord& record);

// Record ids become directory names; ids containing path separators, "..",
// or control characters fail that record with kInvalidArgument.
PipelineSummary RunPipeline(std::span<const EvalRecord> records, LmmBackend& backend,
                            const PipelineOptions& options);

}  // namespace docedit

#endif  // DOCEDIT_PIPELINE_H_
