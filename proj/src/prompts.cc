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

#include "docedit/prompts.h"

#include <cstdint>

#include "docedit/digest.h"
#include "docedit/error.h"
#include "docedit/html.h"
#include "docedit/io.h"
#include "docedit/strings.h"
#include "templates_embedded.h"

namespace docedit {
namespace {

// Template files end with a newline; placeholders are substituted without it.
std::string StripTrailingSpace(std::string_view s) {
  while (!s.empty() && IsAsciiSpace(s.back())) s.remove_suffix(1);
  return std::string(s);
}

void AppendU64(std::uint64_t v, std::string* out) {
  for (int shift = 0; shift < 64; shift += 8) out->push_back(static_cast<char>((v >> shift) & 0xFF));
}

std::size_t FindIgnoreCase(std::string_view haystack, std::string_view needle,
                           std::size_t from = 0) {
  if (needle.size() > haystack.size()) return std::string_view::npos;
  for (std::size_t i = from; i + needle.size() <= haystack.size(); ++i) {
    if (EqualsIgnoreCase(haystack.substr(i, needle.size()), needle)) return i;
  }
  return std::string_view::npos;
}

std::size_t RFindIgnoreCase(std::string_view haystack, std::string_view needle) {
  if (needle.size() > haystack.size()) return std::string_view::npos;
  for (std::size_t i = haystack.size() - needle.size() + 1; i-- > 0;) {
    if (EqualsIgnoreCase(haystack.substr(i, needle.size()), needle)) return i;
  }
  return std::string_view::npos;
}

bool ContainsElement(std::string_view text) {
  try {
    ParseHtml(text);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmptyDocument) throw;
    return false;
  }
}

// Narrows to the <html>/<!doctype> ... </html> span when one is present.
std::string_view NarrowToDocument(std::string_view text) {
  const std::size_t html = FindIgnoreCase(text, "<html");
  const std::size_t doctype = FindIgnoreCase(text, "<!doctype");
  const std::size_t begin = std::min(html, doctype);
  if (begin == std::string_view::npos) return text;
  std::string_view rest = text.substr(begin);
  const std::size_t close = RFindIgnoreCase(rest, "</html>");
  if (close != std::string_view::npos) rest = rest.substr(0, close + 7);
  return rest;
}

}  // namespace

const TemplateSet& TemplateSet::Defaults() {
  static const TemplateSet defaults = [] {
    TemplateSet t;
    t.reformulation = StripTrailingSpace(embedded::k_reformulation_template);
    t.edit = StripTrailingSpace(embedded::k_edit_template);
    t.edit_focus = StripTrailingSpace(embedded::k_edit_focus_template);
    t.replication = StripTrailingSpace(embedded::k_replication_template);
    t.replication_focus = StripTrailingSpace(embedded::k_replication_focus_template);
    t.constraints = StripTrailingSpace(embedded::k_constraints_template);
    return t;
  }();
  return defaults;
}

TemplateSet TemplateSet::LoadDirectory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::kIoError, dir.string() + " is not a directory");
  }
  TemplateSet t = Defaults();
  const std::pair<const char*, std::string*> files[] = {
      {"reformulation.txt", &t.reformulation},
      {"edit.txt", &t.edit},
      {"edit_focus.txt", &t.edit_focus},
      {"replication.txt", &t.replication},
      {"replication_focus.txt", &t.replication_focus},
      {"constraints.txt", &t.constraints},
  };
  for (const auto& [name, slot] : files) {
    const std::filesystem::path path = dir / name;
    if (std::filesystem::exists(path)) *slot = StripTrailingSpace(ReadFile(path));
  }
  return t;
}

std::string RenderTemplate(std::string_view tpl, const std::map<std::string, std::string>& vars) {
  std::string out;
  std::size_t line_start = 0;
  while (line_start <= tpl.size()) {
    std::size_t line_end = tpl.find('\n', line_start);
    const bool last = line_end == std::string_view::npos;
    if (last) line_end = tpl.size();
    const std::string_view line = tpl.substr(line_start, line_end - line_start);

    std::string rendered;
    bool only_empty_placeholder = false;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const std::size_t open = line.find("{{", pos);
      if (open == std::string_view::npos) {
        rendered.append(line.substr(pos));
        break;
      }
      const std::size_t close = line.find("}}", open + 2);
      if (close == std::string_view::npos) {
        rendered.append(line.substr(pos));
        break;
      }
      rendered.append(line.substr(pos, open - pos));
      const std::string name(Trim(line.substr(open + 2, close - open - 2)));
      auto it = vars.find(name);
      if (it == vars.end()) {
        throw Error(ErrorCode::kInvalidArgument, "template placeholder {{" + name + "}} has no value");
      }
      rendered.append(it->second);
      if (it->second.empty() && Trim(line) == line.substr(open, close + 2 - open)) {
        only_empty_placeholder = true;
      }
      pos = close + 2;
    }

    if (!only_empty_placeholder) {
      out.append(rendered);
      if (!last) out.push_back('\n');
    }
    if (last) break;
    line_start = line_end + 1;
  }
  return out;
}

Prompt BuildReformulationPrompt(std::string_view request, const EditCommand& command,
                                const TemplateSet& templates) {
  Prompt prompt;
  prompt.text = RenderTemplate(templates.reformulation,
                               {{"request", std::string(request)},
                                {"command", FormatCommand(command)}});
  return prompt;
}

Prompt BuildEditPrompt(std::string_view instruction, const RasterImage& image, bool grounded,
                       const TemplateSet& templates) {
  if (image.empty()) throw Error(ErrorCode::kInvalidArgument, "edit prompt needs an image");
  Prompt prompt;
  prompt.text = RenderTemplate(templates.edit,
                               {{"constraints", templates.constraints},
                                {"focus", grounded ? templates.edit_focus : std::string()},
                                {"instruction", std::string(instruction)}});
  prompt.image = image;
  return prompt;
}

Prompt BuildReplicationPrompt(const RasterImage& image, const std::optional<BoundingBox>& box,
                              const TemplateSet& templates, const MarkStyle& marks) {
  if (image.empty()) throw Error(ErrorCode::kInvalidArgument, "replication prompt needs an image");
  Prompt prompt;
  prompt.image = box ? DrawSetOfMarks(image, *box, marks) : image;
  prompt.text = RenderTemplate(
      templates.replication,
      {{"constraints", templates.constraints},
       {"focus", box ? templates.replication_focus : std::string()}});
  return prompt;
}

std::string PromptFingerprint(const Prompt& prompt) {
  std::string canonical = "docedit-prompt-v1";
  canonical.push_back('\0');
  AppendU64(prompt.text.size(), &canonical);
  canonical.append(prompt.text);
  if (prompt.image) {
    canonical.push_back('\1');
    AppendU64(static_cast<std::uint64_t>(prompt.image->width()), &canonical);
    AppendU64(static_cast<std::uint64_t>(prompt.image->height()), &canonical);
    const auto& bytes = prompt.image->bytes();
    canonical.append(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  } else {
    canonical.push_back('\0');
  }
  return Sha256Hex(canonical);
}

std::string ExtractHtml(std::string_view response) {
  std::size_t search = 0;
  while (true) {
    const std::size_t fence = response.find("```", search);
    if (fence == std::string_view::npos) break;
    std::size_t body = response.find('\n', fence + 3);
    if (body == std::string_view::npos) break;
    ++body;
    std::size_t end = response.find("```", body);
    const bool closed = end != std::string_view::npos;
    if (!closed) end = response.size();
    const std::string_view block = response.substr(body, end - body);
    const std::string candidate(Trim(NarrowToDocument(block)));
    if (ContainsElement(candidate)) return candidate;
    if (!closed) break;
    search = end + 3;
  }

  const std::string candidate(Trim(NarrowToDocument(response)));
  if (candidate.find("```") == std::string::npos && ContainsElement(candidate)) return candidate;
  throw Error(ErrorCode::kNoHtmlFound, "model response contains no HTML document");
}

}  // namespace docedit
