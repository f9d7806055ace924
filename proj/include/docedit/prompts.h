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

// Prompt assembly for the three model calls of the editing pipeline:
// command reformulation (text only), grounded HTML editing, and
// image-to-HTML replication of reference pages.
//
// Wording lives in templates/*.txt and is compiled in; a TemplateSet can
// also be loaded from a directory to try variants without rebuilding.
// Builders are pure: no clock, randomness or environment access.

#ifndef DOCEDIT_PROMPTS_H_
#define DOCEDIT_PROMPTS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "docedit/command.h"
#include "docedit/grounding.h"
#include "docedit/image.h"
#include "docedit/render.h"

namespace docedit {

struct PromptParams {
  double temperature = 0.0;
  int max_tokens = 4000;

  friend bool operator==(const PromptParams&, const PromptParams&) = default;
};

struct Prompt {
  std::string text;
  std::optional<RasterImage> image;
  PromptParams params;

  friend bool operator==(const Prompt&, const Prompt&) = default;
};

struct TemplateSet {
  std::string reformulation;      // {{request}}, {{command}}
  std::string edit;               // {{constraints}}, {{focus}}, {{instruction}}
  std::string edit_focus;
  std::string replication;        // {{constraints}}, {{focus}}
  std::string replication_focus;
  std::string constraints;

  // The compiled-in templates.
  static const TemplateSet& Defaults();

  // Defaults overridden by whichever of reformulation.txt, edit.txt, ...
  // exist in `dir`. Throws Error(kIoError).
  static TemplateSet LoadDirectory(const std::filesystem::path& dir);
};

// Replaces {{name}} placeholders. A line consisting only of a placeholder
// whose value is empty is removed entirely. Throws Error(kInvalidArgument)
// for a placeholder with no value.
std::string RenderTemplate(std::string_view tpl, const std::map<std::string, std::string>& vars);

// Text-only prompt carrying the request verbatim and the command in
// FormatCommand form.
Prompt BuildReformulationPrompt(std::string_view request, const EditCommand& command,
                                const TemplateSet& templates = TemplateSet::Defaults());

// Multimodal editing prompt. `grounded` controls the bounding-box focus
// sentence; the caller passes the marked image when it is set.
Prompt BuildEditPrompt(std::string_view instruction, const RasterImage& image,
                       bool grounded = true,
                       const TemplateSet& templates = TemplateSet::Defaults());

// Image-to-HTML prompt for reference pages. With a box, the overlay is drawn
// on the attached image and the focus sentence is included.
// Throws Error(kBoxOutOfBounds).
Prompt BuildReplicationPrompt(const RasterImage& image, const std::optional<BoundingBox>& box,
                              const TemplateSet& templates = TemplateSet::Defaults(),
                              const MarkStyle& marks = {});

// SHA-256 over a length-prefixed serialization of the prompt text and the
// attached image's dimensions and RGB bytes. Sampling parameters are not
// part of the key.
std::string PromptFingerprint(const Prompt& prompt);

// Pulls the HTML document out of a model reply: the first fenced block that
// contains markup, else the span from the first <html / <!doctype to the
// last </html>, else the whole reply if it contains an element. The result
// is trimmed, and ExtractHtml(ExtractHtml(x)) == ExtractHtml(x).
// Throws Error(kNoHtmlFound).
std::string ExtractHtml(std::string_view response);

}  // namespace docedit

#endif  // DOCEDIT_PROMPTS_H_
