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

// Edit-command grammar: `action(component, initial state, final state)`.
//
// Fields that contain a comma or a double quote are written double-quoted,
// with embedded quotes doubled (`"say ""hi"""`). Unquoted legacy strings
// with extra commas are still accepted: the first top-level comma ends the
// component, the last one starts the final state, and everything in between
// is the initial state.

#ifndef DOCEDIT_COMMAND_H_
#define DOCEDIT_COMMAND_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace docedit {

enum class EditAction { kAdd, kDelete, kCopy, kMove, kReplace, kSplit, kMerge, kModify };

inline constexpr std::array<EditAction, 8> kAllActions = {
    EditAction::kAdd,     EditAction::kDelete, EditAction::kCopy,  EditAction::kMove,
    EditAction::kReplace, EditAction::kSplit,  EditAction::kMerge, EditAction::kModify};

// Lowercase keyword, e.g. "delete".
std::string_view ActionKeyword(EditAction action);

// Case-insensitive lookup; nullopt for words outside the taxonomy.
std::optional<EditAction> ParseAction(std::string_view word);

struct EditCommand {
  EditAction action = EditAction::kModify;
  std::string component;
  std::string initial_state;
  std::string final_state;

  friend bool operator==(const EditCommand&, const EditCommand&) = default;
};

// Throws Error(kUnknownAction) or Error(kMalformedBody). Field case is kept.
EditCommand ParseCommand(std::string_view text);

// Canonical text of NormalizeCommand(cmd). ParseCommand(SerializeCommand(c))
// == NormalizeCommand(c) for every command.
std::string SerializeCommand(const EditCommand& cmd);

// Same grammar as SerializeCommand but keeps the letter case of the fields.
// Used where the text is read by a model rather than compared.
std::string FormatCommand(const EditCommand& cmd);

// Trim, collapse internal whitespace runs to one space, ASCII-lowercase.
EditCommand NormalizeCommand(const EditCommand& cmd);

// Field-level helper shared with the metrics code.
std::string NormalizeField(std::string_view field);

}  // namespace docedit

#endif  // DOCEDIT_COMMAND_H_
