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

// Raster helpers for the editing pipeline: the request banner stacked over
// a page and the rectangle ("set of marks") drawn around a grounded region.

#ifndef DOCEDIT_RENDER_H_
#define DOCEDIT_RENDER_H_

#include <string_view>

#include "docedit/grounding.h"
#include "docedit/image.h"

namespace docedit {

inline constexpr int kGlyphWidth = 8;
inline constexpr int kGlyphHeight = 16;

struct BannerStyle {
  int padding = 12;   // around the text block, all four sides
  int line_gap = 4;   // between wrapped lines
  Rgb background = kWhite;
  Rgb ink = kBlack;
  // The banner may not be taller than this fraction of the page.
  double max_height_fraction = 0.5;
};

// Height of the banner for `lines` wrapped lines.
int BannerHeight(int lines, const BannerStyle& style = {});

// Word-wraps `request` to the page width using the built-in 8x16 font
// and stacks the banner on top of `page`. Width is unchanged.
// Throws Error(kInvalidArgument) for an empty request and
// Error(kTextTooLong) when the banner would exceed the height limit.
RasterImage RenderRequestBanner(const RasterImage& page, std::string_view request,
                                const BannerStyle& style = {});

struct MarkStyle {
  Rgb color = kRed;
  int thickness = 3;
};

// Draws the box outline inside the box's own pixels; everything outside the
// frame band is untouched. Box coordinates are rounded to whole pixels.
// Throws Error(kBoxOutOfBounds).
RasterImage DrawSetOfMarks(const RasterImage& image, const BoundingBox& box,
                           const MarkStyle& style = {});

}  // namespace docedit

#endif  // DOCEDIT_RENDER_H_
