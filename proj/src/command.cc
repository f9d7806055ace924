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

#include "docedit/command.h"

#include <string>
#include <vector>

#include "docedit/error.h"
#include "docedit/strings.h"

namespace docedit {
namespace {

// One top-level comma-separated piece of the argument list.
struct Segment {
  std::string value;      // unquoted and trimmed
  std::size_t begin = 0;  // raw span inside the body
  std::size_t end = 0;
};

std::vector<Segment> SplitTopLevel(std::string_view body) {
  std::vector<Segment> segments;
  std::size_t pos = 0;
  while (true) {
    Segment seg;
    seg.begin = pos;
    std::size_t cursor = pos;
    while (cursor < body.size() && IsAsciiSpace(body[cursor])) ++cursor;

    bool quoted_ok = false;
    if (cursor < body.size() && body[cursor] == '"') {
      std::string unquoted;
      std::size_t i = cursor + 1;
      bool closed = false;
      while (i < body.size()) {
        if (body[i] == '"') {
          if (i + 1 < body.size() && body[i + 1] == '"') {
            unquoted.push_back('"');
            i += 2;
            continue;
          }
          closed = true;
          ++i;
          break;
        }
        unquoted.push_back(body[i++]);
      }
      std::size_t after = i;
      while (after < body.size() && IsAsciiSpace(body[after])) ++after;
      if (closed && (after == body.size() || body[after] == ',')) {
        seg.value = std::move(unquoted);
        seg.end = after;
        quoted_ok = true;
        pos = after;
      }
    }
    if (!quoted_ok) {
      // Raw segment: runs to the next comma. A stray quote is literal text.
      std::size_t comma = body.find(',', pos);
      if (comma == std::string_view::npos) comma = body.size();
      seg.value = std::string(Trim(body.substr(pos, comma - pos)));
      seg.end = comma;
      pos = comma;
    }
    segments.push_back(std::move(seg));
    if (pos >= body.size()) break;
    ++pos;  // skip ','
  }
  return segments;
}

bool NeedsQuoting(std::string_view field) {
  return field.find(',') != std::string_view::npos || field.find('"') != std::string_view::npos;
}

void AppendField(std::string_view field, std::string* out) {
  if (!NeedsQuoting(field)) {
    out->append(field);
    return;
  }
  out->push_back('"');
  for (char c : field) {
    if (c == '"') out->push_back('"');
    out->push_back(c);
  }
  out->push_back('"');
}

std::string Emit(EditAction action, std::string_view component, std::string_view initial,
                 std::string_view final_state) {
  std::string out(ActionKeyword(action));
  out.push_back('(');
  AppendField(component, &out);
  out.append(", ");
  AppendField(initial, &out);
  out.append(", ");
  AppendField(final_state, &out);
  out.push_back(')');
  return out;
}

}  // namespace

std::string_view ActionKeyword(EditAction action) {
  switch (action) {
    case EditAction::kAdd: return "add";
    case EditAction::kDelete: return "delete";
    case EditAction::kCopy: return "copy";
    case EditAction::kMove: return "move";
    case EditAction::kReplace: return "replace";
    case EditAction::kSplit: return "split";
    case EditAction::kMerge: return "merge";
    case EditAction::kModify: return "modify";
  }
  return "modify";
}

std::optional<EditAction> ParseAction(std::string_view word) {
  for (EditAction action : kAllActions) {
    if (EqualsIgnoreCase(word, ActionKeyword(action))) return action;
  }
  return std::nullopt;
}

EditCommand ParseCommand(std::string_view text) {
  text = Trim(text);
  if (text.empty()) throw Error(ErrorCode::kMalformedBody, "empty command");

  const std::size_t open = text.find('(');
  // Without a parenthesis the action prefix is the leading word.
  const std::string_view word =
      open == std::string_view::npos ? text.substr(0, text.find_first_of(" \t\r\n,"))
                                     : Trim(text.substr(0, open));
  const std::optional<EditAction> action = ParseAction(word);
  if (!action) {
    throw Error(ErrorCode::kUnknownAction, "'" + std::string(word) + "' is not an edit action");
  }
  if (open == std::string_view::npos || text.back() != ')') {
    throw Error(ErrorCode::kMalformedBody, "expected '(...)' after action in '" +
                                               std::string(text) + "'");
  }

  const std::string_view body = text.substr(open + 1, text.size() - open - 2);
  std::vector<Segment> segments = SplitTopLevel(body);
  if (segments.size() < 3) {
    throw Error(ErrorCode::kMalformedBody,
                "expected 3 arguments, found " + std::to_string(segments.size()));
  }

  EditCommand cmd;
  cmd.action = *action;
  cmd.component = std::move(segments.front().value);
  cmd.final_state = std::move(segments.back().value);
  if (segments.size() == 3) {
    cmd.initial_state = std::move(segments[1].value);
  } else {
    const std::size_t begin = segments[1].begin;
    const std::size_t end = segments[segments.size() - 2].end;
    cmd.initial_state = std::string(Trim(body.substr(begin, end - begin)));
  }
  return cmd;
}

std::string NormalizeField(std::string_view field) {
  return AsciiLower(CollapseWhitespace(field));
}

EditCommand NormalizeCommand(const EditCommand& cmd) {
  return EditCommand{cmd.action, NormalizeField(cmd.component),
                     NormalizeField(cmd.initial_state), NormalizeField(cmd.final_state)};
}

std::string SerializeCommand(const EditCommand& cmd) {
  const EditCommand norm = NormalizeCommand(cmd);
  return Emit(norm.action, norm.component, norm.initial_state, norm.final_state);
}

std::string FormatCommand(const EditCommand& cmd) {
  return Emit(cmd.action, CollapseWhitespace(cmd.component),
              CollapseWhitespace(cmd.initial_state), CollapseWhitespace(cmd.final_state));
}

}  // namespace docedit
