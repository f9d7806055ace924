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

#include "docedit/render.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "docedit/error.h"
#include "docedit/strings.h"

namespace docedit {
namespace {

constexpr std::uint8_t kFont[95][kGlyphHeight] = {
#include "font8x16.inc"
};

void DrawGlyph(RasterImage* image, int left, int top, char c, Rgb ink) {
  const auto code = static_cast<unsigned char>(c);
  const std::uint8_t* rows = kFont[(code >= 32 && code <= 126) ? code - 32 : '?' - 32];
  for (int gy = 0; gy < kGlyphHeight; ++gy) {
    for (int gx = 0; gx < kGlyphWidth; ++gx) {
      if ((rows[gy] & (0x80 >> gx)) == 0) continue;
      const int x = left + gx;
      const int y = top + gy;
      if (x >= 0 && x < image->width() && y >= 0 && y < image->height()) image->set(x, y, ink);
    }
  }
}

// Greedy word wrap; words longer than a line are hard-broken. Explicit
// newlines start a new line.
std::vector<std::string> WrapText(std::string_view text, std::size_t columns) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string paragraph = CollapseWhitespace(text.substr(start, nl - start));
    start = nl + 1;
    if (paragraph.empty()) continue;

    std::string line;
    std::size_t i = 0;
    while (i < paragraph.size()) {
      std::size_t end = paragraph.find(' ', i);
      if (end == std::string::npos) end = paragraph.size();
      std::string_view word(paragraph.data() + i, end - i);
      i = end + 1;
      while (!word.empty()) {
        const std::size_t needed = line.empty() ? word.size() : line.size() + 1 + word.size();
        if (needed <= columns) {
          if (!line.empty()) line.push_back(' ');
          line.append(word);
          word = {};
        } else if (line.empty()) {
          line.append(word.substr(0, columns));
          word.remove_prefix(columns);
          lines.push_back(std::move(line));
          line.clear();
        } else {
          lines.push_back(std::move(line));
          line.clear();
        }
      }
    }
    if (!line.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

int BannerHeight(int lines, const BannerStyle& style) {
  return 2 * style.padding + lines * kGlyphHeight + std::max(0, lines - 1) * style.line_gap;
}

RasterImage RenderRequestBanner(const RasterImage& page, std::string_view request,
                                const BannerStyle& style) {
  if (page.empty()) throw Error(ErrorCode::kInvalidArgument, "page image is empty");
  if (Trim(request).empty()) throw Error(ErrorCode::kInvalidArgument, "request is empty");
  const int usable = page.width() - 2 * style.padding;
  if (usable < kGlyphWidth) {
    throw Error(ErrorCode::kTextTooLong, "page too narrow for the banner font");
  }
  const std::vector<std::string> lines =
      WrapText(request, static_cast<std::size_t>(usable / kGlyphWidth));
  const int banner = BannerHeight(static_cast<int>(lines.size()), style);
  if (banner > style.max_height_fraction * page.height()) {
    throw Error(ErrorCode::kTextTooLong,
                "banner of " + std::to_string(banner) + " px exceeds the allowed fraction of a " +
                    std::to_string(page.height()) + " px page");
  }

  RasterImage out(page.width(), page.height() + banner, style.background);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const int top = style.padding + static_cast<int>(l) * (kGlyphHeight + style.line_gap);
    for (std::size_t c = 0; c < lines[l].size(); ++c) {
      DrawGlyph(&out, style.padding + static_cast<int>(c) * kGlyphWidth, top, lines[l][c],
                style.ink);
    }
  }
  for (int y = 0; y < page.height(); ++y) {
    for (int x = 0; x < page.width(); ++x) out.set(x, y + banner, page.at(x, y));
  }
  return out;
}

RasterImage DrawSetOfMarks(const RasterImage& image, const BoundingBox& box,
                           const MarkStyle& style) {
  if (image.empty()) throw Error(ErrorCode::kInvalidArgument, "image is empty");
  if (style.thickness <= 0) throw Error(ErrorCode::kInvalidArgument, "thickness must be > 0");
  const BoundingBox rounded{std::round(box.x), std::round(box.y), std::round(box.h),
                            std::round(box.w)};
  ValidateBox(rounded, image.width(), image.height());

  const int x0 = static_cast<int>(rounded.x);
  const int y0 = static_cast<int>(rounded.y);
  const int x1 = x0 + static_cast<int>(rounded.w);  // exclusive
  const int y1 = y0 + static_cast<int>(rounded.h);
  RasterImage out = image;
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) {
      const int edge = std::min({x - x0, x1 - 1 - x, y - y0, y1 - 1 - y});
      if (edge < style.thickness) out.set(x, y, style.color);
    }
  }
  return out;
}

}  // namespace docedit
