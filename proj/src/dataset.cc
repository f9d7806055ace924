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

#include "docedit/dataset.h"

#include <set>

#include "docedit/error.h"
#include "docedit/io.h"
#include "docedit/strings.h"
#include "json.hpp"

namespace docedit {
namespace {

using json = nlohmann::json;

[[noreturn]] void Fail(const std::string& message) { throw Error(ErrorCode::kSchemaError, message); }

std::optional<std::string> OptionalString(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) Fail(std::string("'") + key + "' must be a string");
  return it->get<std::string>();
}

std::optional<EditCommand> OptionalCommand(const json& obj, const char* key) {
  std::optional<std::string> text = OptionalString(obj, key);
  if (!text) return std::nullopt;
  try {
    return ParseCommand(*text);
  } catch (const Error& e) {
    Fail(std::string("'") + key + "': " + e.what());
  }
}

std::optional<BoundingBox> OptionalBox(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_object()) Fail(std::string("'") + key + "' must be an object {x, y, h, w}");
  BoundingBox box;
  double* slots[] = {&box.x, &box.y, &box.h, &box.w};
  const char* names[] = {"x", "y", "h", "w"};
  for (int i = 0; i < 4; ++i) {
    auto field = it->find(names[i]);
    if (field == it->end() || !field->is_number()) {
      Fail(std::string("'") + key + "." + names[i] + "' must be a number");
    }
    *slots[i] = field->get<double>();
  }
  try {
    ValidateBox(box);
  } catch (const Error& e) {
    Fail(std::string("'") + key + "': " + e.what());
  }
  return box;
}

std::optional<std::filesystem::path> OptionalPath(const json& obj, const char* key,
                                                  const std::filesystem::path& base_dir) {
  std::optional<std::string> text = OptionalString(obj, key);
  if (!text) return std::nullopt;
  if (text->empty()) Fail(std::string("'") + key + "' is empty");
  std::filesystem::path p(*text);
  return p.is_relative() ? base_dir / p : p;
}

int Binary(const json& score, const char* key, bool required) {
  auto it = score.find(key);
  if (it == score.end()) {
    if (required) Fail(std::string("human score lacks '") + key + "'");
    return 0;
  }
  if (!it->is_number_integer() || (it->get<int>() != 0 && it->get<int>() != 1)) {
    Fail(std::string("human score '") + key + "' must be 0 or 1");
  }
  return it->get<int>();
}

}  // namespace

EvalRecord ParseEvalRecord(std::string_view line, const std::filesystem::path& base_dir) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::exception& e) {
    Fail(std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) Fail("record must be a JSON object");

  EvalRecord r;
  std::optional<std::string> id = OptionalString(obj, "id");
  if (!id || Trim(*id).empty()) Fail("record lacks a non-empty 'id'");
  r.id = *id;
  r.user_request = OptionalString(obj, "user_request").value_or("");
  r.pred_command = OptionalCommand(obj, "pred_command");
  r.gold_command = OptionalCommand(obj, "gold_command");
  r.pred_bbox = OptionalBox(obj, "pred_bbox");
  r.gold_bbox = OptionalBox(obj, "gold_bbox");
  r.pred_mask = OptionalPath(obj, "pred_mask", base_dir);
  r.pred_html = OptionalPath(obj, "pred_html", base_dir);
  r.gold_html = OptionalPath(obj, "gold_html", base_dir);
  r.image = OptionalPath(obj, "image", base_dir);

  if (auto it = obj.find("human_scores"); it != obj.end() && !it->is_null()) {
    if (!it->is_array()) Fail("'human_scores' must be an array");
    std::set<std::string> evaluators;
    for (const json& s : *it) {
      if (!s.is_object()) Fail("human score must be an object");
      HumanScore hs;
      std::optional<std::string> who = OptionalString(s, "evaluator");
      if (!who || who->empty()) Fail("human score lacks 'evaluator'");
      hs.evaluator = *who;
      if (!evaluators.insert(hs.evaluator).second) {
        Fail("evaluator '" + hs.evaluator + "' scored the record twice");
      }
      hs.sr = Binary(s, "sr", true);
      hs.cc = Binary(s, "cc", true);
      hs.ec = Binary(s, "ec", true);
      hs.star = Binary(s, "star", false);
      r.human_scores.push_back(std::move(hs));
    }
  }

  const bool pipeline_inputs = r.image && (r.pred_command || !r.user_request.empty());
  if (!r.has_command_pair() && !r.has_bbox_pair() && !r.has_html_pair() && !pipeline_inputs &&
      r.human_scores.empty()) {
    Fail("record '" + r.id + "' has no pred/gold pair, pipeline input or human score");
  }
  return r;
}

Dataset ParseDataset(std::string_view text, const std::filesystem::path& base_dir) {
  Dataset ds;
  std::set<std::string> ids;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = Trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    std::optional<EvalRecord> r;
    try {
      r = ParseEvalRecord(line, base_dir);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSchemaError) throw;
      ds.issues.push_back({line_no, e.what()});
      continue;
    }
    if (!ids.insert(r->id).second) {
      throw Error(ErrorCode::kSchemaError,
                  "line " + std::to_string(line_no) + ": duplicate id '" + r->id + "'");
    }
    ds.records.push_back(std::move(*r));
  }
  if (ds.records.empty()) {
    std::string message = "dataset has no valid records";
    if (!ds.issues.empty()) {
      message += " (line " + std::to_string(ds.issues.front().line) + ": " +
                 ds.issues.front().message + ")";
    }
    throw Error(ErrorCode::kSchemaError, message);
  }
  return ds;
}

Dataset LoadDataset(const std::filesystem::path& path) {
  return ParseDataset(ReadFile(path), path.parent_path());
}

}  // namespace docedit
