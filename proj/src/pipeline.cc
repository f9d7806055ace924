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

#include "docedit/pipeline.h"

#include <algorithm>
#include <exception>

#include "docedit/image.h"
#include "docedit/io.h"
#include "docedit/strings.h"
#include "parallel.h"

namespace docedit {
namespace {

namespace fs = std::filesystem;

bool IsPathSafe(const std::string& id) {
  return !id.empty() && id != "." && id != ".." && id.find_first_of("/\\") == std::string::npos &&
         std::none_of(id.begin(), id.end(),
                      [](char c) { return static_cast<unsigned char>(c) < 0x20; });
}

std::string WithNewline(std::string s) {
  if (s.empty() || s.back() != '\n') s.push_back('\n');
  return s;
}

const BoundingBox* FocusBox(const EvalRecord& r, PipelineTask task) {
  if (task == PipelineTask::kReplicate && r.gold_bbox) return &*r.gold_bbox;
  if (r.pred_bbox) return &*r.pred_bbox;
  return nullptr;
}

std::string Reformulate(const EvalRecord& r, LmmBackend& backend, const PipelineOptions& options,
                        const fs::path& dir) {
  if (!r.pred_command) {
    throw Error(ErrorCode::kInvalidArgument, "reformulation needs pred_command");
  }
  Prompt prompt = BuildReformulationPrompt(r.user_request, *r.pred_command, options.templates);
  prompt.params = options.params;
  WriteFileAtomic(dir / "reformulation_prompt.txt", WithNewline(prompt.text));
  const std::string response = backend.Complete(prompt);
  WriteFileAtomic(dir / "reformulation_response.txt", response);
  const std::string instruction(Trim(response));
  if (instruction.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "reformulation returned an empty instruction");
  }
  return instruction;
}

void ProcessRecord(const EvalRecord& r, LmmBackend& backend, const PipelineOptions& options,
                   const fs::path& dir) {
  const bool edit_like = options.task != PipelineTask::kReformulate;
  std::optional<RasterImage> page;
  if (edit_like) {
    if (!r.image) throw Error(ErrorCode::kInvalidArgument, "record has no image");
    page = ReadPng(*r.image);
  }

  if (options.task != PipelineTask::kReplicate) {
    const std::string instruction = options.flags.use_reformulation
                                        ? Reformulate(r, backend, options, dir)
                                        : DirectInstruction(r);
    WriteFileAtomic(dir / "instruction.txt", WithNewline(instruction));
    if (!edit_like) return;

    const bool grounded = options.flags.use_grounding;
    RasterImage image = *page;
    if (grounded) {
      const BoundingBox* box = FocusBox(r, options.task);
      if (box == nullptr) {
        throw Error(ErrorCode::kInvalidArgument, "grounding is on but the record has no pred_bbox");
      }
      image = DrawSetOfMarks(image, *box, options.marks);
      WritePng(dir / "marked.png", image);
    }
    Prompt prompt = BuildEditPrompt(instruction, image, grounded, options.templates);
    prompt.params = options.params;
    WriteFileAtomic(dir / "prompt.txt", WithNewline(prompt.text));
    const std::string response = backend.Complete(prompt);
    WriteFileAtomic(dir / "response.txt", response);
    WriteFileAtomic(dir / "edited.html", WithNewline(ExtractHtml(response)));
    return;
  }

  std::optional<BoundingBox> box;
  if (options.flags.use_grounding) {
    if (const BoundingBox* b = FocusBox(r, options.task)) box = *b;
  }
  Prompt prompt = BuildReplicationPrompt(*page, box, options.templates, options.marks);
  prompt.params = options.params;
  if (box) WritePng(dir / "marked.png", *prompt.image);
  WriteFileAtomic(dir / "prompt.txt", WithNewline(prompt.text));
  const std::string response = backend.Complete(prompt);
  WriteFileAtomic(dir / "response.txt", response);
  WriteFileAtomic(dir / "edited.html", WithNewline(ExtractHtml(response)));
}

// The file whose presence marks a record as done.
const char* DoneMarker(PipelineTask task) {
  return task == PipelineTask::kReformulate ? "instruction.txt" : "edited.html";
}

}  // namespace

std::string DirectInstruction(const EvalRecord& record) {
  if (record.pred_command) return FormatCommand(*record.pred_command);
  if (!Trim(record.user_request).empty()) return std::string(Trim(record.user_request));
  throw Error(ErrorCode::kInvalidArgument, "record has neither pred_command nor user_request");
}

PipelineSummary RunPipeline(std::span<const EvalRecord> records, LmmBackend& backend,
                            const PipelineOptions& options) {
  PipelineSummary summary;
  summary.outcomes.resize(records.size());
  internal::ParallelFor(records.size(), options.workers, [&](std::size_t i) {
    const EvalRecord& r = records[i];
    RecordOutcome& outcome = summary.outcomes[i];
    outcome.id = r.id;
    const bool path_safe = IsPathSafe(r.id);
    try {
      if (!path_safe) {
        throw Error(ErrorCode::kInvalidArgument, "record id is not usable as a directory name");
      }
      const fs::path dir = options.out_dir / r.id;
      if (fs::exists(dir / DoneMarker(options.task))) {
        outcome.status = RecordStatus::kSkipped;
        return;
      }
      fs::create_directories(dir);
      ProcessRecord(r, backend, options, dir);
      fs::remove(dir / "error.txt");
      outcome.status = RecordStatus::kCompleted;
    } catch (const std::exception& e) {
      outcome.status = RecordStatus::kFailed;
      outcome.error = e.what();
      if (const auto* err = dynamic_cast<const Error*>(&e)) outcome.error_code = err->code();
      try {
        if (path_safe) {
          WriteFileAtomic(options.out_dir / r.id / "error.txt", WithNewline(outcome.error));
        }
      } catch (const std::exception&) {
        // The outcome already carries the failure.
      }
    }
  });
  for (const RecordOutcome& o : summary.outcomes) {
    switch (o.status) {
      case RecordStatus::kCompleted:
        ++summary.completed;
        break;
      case RecordStatus::kSkipped:
        ++summary.skipped;
        break;
      case RecordStatus::kFailed:
        ++summary.failed;
        break;
    }
  }
  return summary;
}

}  // namespace docedit
