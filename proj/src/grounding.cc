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

#include "docedit/grounding.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "docedit/error.h"

namespace docedit {
namespace {

// Exact integer arithmetic for scaled squared distances.
__extension__ typedef __int128 Wide;

void CheckShape(int rows, int cols, int k, std::size_t values_per_pixel, std::size_t size) {
  if (rows <= 0 || cols <= 0 || k <= 0 || k > 255) {
    throw Error(ErrorCode::kInvalidArgument, "map dimensions must be positive (k <= 255)");
  }
  const std::size_t expected = static_cast<std::size_t>(rows) * cols * values_per_pixel;
  if (size != expected) {
    throw Error(ErrorCode::kInvalidArgument, "map holds " + std::to_string(size) +
                                                 " values, expected " + std::to_string(expected));
  }
}

}  // namespace

void ValidateBox(const BoundingBox& box) {
  if (!(box.h > 0) || !(box.w > 0) || !std::isfinite(box.x) || !std::isfinite(box.y) ||
      !std::isfinite(box.h) || !std::isfinite(box.w)) {
    throw Error(ErrorCode::kInvalidArgument, "bounding box needs finite h > 0 and w > 0");
  }
}

void ValidateBox(const BoundingBox& box, int image_width, int image_height) {
  ValidateBox(box);
  if (box.x < 0 || box.y < 0 || box.x + box.w > image_width || box.y + box.h > image_height) {
    throw Error(ErrorCode::kBoxOutOfBounds, "box exceeds the " + std::to_string(image_width) +
                                                "x" + std::to_string(image_height) + " image");
  }
}

void ValidateScoreMap(const ScoreMap& scores) {
  CheckShape(scores.rows, scores.cols, scores.k, static_cast<std::size_t>(scores.k),
             scores.data.size());
  const std::size_t pixels = static_cast<std::size_t>(scores.rows) * scores.cols;
  for (std::size_t p = 0; p < pixels; ++p) {
    double sum = 0;
    for (int c = 0; c < scores.k; ++c) sum += scores.data[p * scores.k + c];
    if (!(std::abs(sum - 1.0) <= kNormalizationTolerance)) {
      throw Error(ErrorCode::kNotNormalized,
                  "pixel (" + std::to_string(p / scores.cols) + ", " +
                      std::to_string(p % scores.cols) + ") scores sum to " + std::to_string(sum));
    }
  }
}

void ValidateLabelMap(const LabelMap& labels) {
  CheckShape(labels.rows, labels.cols, labels.k, 1, labels.labels.size());
  for (std::uint8_t v : labels.labels) {
    if (v >= labels.k) {
      throw Error(ErrorCode::kInvalidArgument,
                  "label " + std::to_string(v) + " outside [0, " + std::to_string(labels.k) + ")");
    }
  }
}

LabelMap ArgmaxLabels(const ScoreMap& scores) {
  ValidateScoreMap(scores);
  LabelMap out{scores.rows, scores.cols, scores.k, {}};
  const std::size_t pixels = static_cast<std::size_t>(scores.rows) * scores.cols;
  out.labels.resize(pixels);
  for (std::size_t p = 0; p < pixels; ++p) {
    const float* row = scores.data.data() + p * scores.k;
    int best = 0;
    for (int c = 1; c < scores.k; ++c) {
      if (row[c] > row[best]) best = c;
    }
    out.labels[p] = static_cast<std::uint8_t>(best);
  }
  return out;
}

ScoreMap OneHot(const LabelMap& labels) {
  ValidateLabelMap(labels);
  ScoreMap out{labels.rows, labels.cols, labels.k, {}};
  out.data.assign(labels.labels.size() * labels.k, 0.0f);
  for (std::size_t p = 0; p < labels.labels.size(); ++p) {
    out.data[p * labels.k + labels.labels[p]] = 1.0f;
  }
  return out;
}

std::vector<Pixel> LargestComponent(const LabelMap& labels, int cls) {
  ValidateLabelMap(labels);
  if (cls < 0 || cls >= labels.k) {
    throw Error(ErrorCode::kInvalidArgument, "class index out of range");
  }
  const int rows = labels.rows;
  const int cols = labels.cols;
  std::vector<bool> seen(labels.labels.size(), false);
  std::vector<Pixel> best;
  std::vector<Pixel> component;
  std::vector<Pixel> frontier;

  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r) * cols + c;
      if (seen[idx] || labels.labels[idx] != cls) continue;
      component.clear();
      frontier.assign(1, {r, c});
      seen[idx] = true;
      while (!frontier.empty()) {
        const Pixel p = frontier.back();
        frontier.pop_back();
        component.push_back(p);
        for (int dr = -1; dr <= 1; ++dr) {
          for (int dc = -1; dc <= 1; ++dc) {
            const int nr = p.row + dr;
            const int nc = p.col + dc;
            if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
            const std::size_t nidx = static_cast<std::size_t>(nr) * cols + nc;
            if (seen[nidx] || labels.labels[nidx] != cls) continue;
            seen[nidx] = true;
            frontier.push_back({nr, nc});
          }
        }
      }
      if (component.size() > best.size()) best.swap(component);
    }
  }
  std::sort(best.begin(), best.end(), [](const Pixel& a, const Pixel& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return best;
}

BoundingBox MaskToBox(const LabelMap& labels, MaskToBoxOptions options) {
  if (!(options.radius_percentile > 0 && options.radius_percentile <= 100)) {
    throw Error(ErrorCode::kInvalidArgument, "radius percentile must be in (0, 100]");
  }
  const std::vector<Pixel> component = LargestComponent(labels, kRoiClass);
  if (component.empty()) throw Error(ErrorCode::kEmptyRoi, "no region-of-interest pixel");

  // Distances are compared scaled by n so the centroid stays integral and
  // mirror-image pixels get bit-identical distances.
  const auto n = static_cast<Wide>(component.size());
  Wide sum_r = 0;
  Wide sum_c = 0;
  for (const Pixel& p : component) {
    sum_r += p.row;
    sum_c += p.col;
  }
  std::vector<Wide> dist(component.size());
  for (std::size_t i = 0; i < component.size(); ++i) {
    const Wide dr = n * component[i].row - sum_r;
    const Wide dc = n * component[i].col - sum_c;
    dist[i] = dr * dr + dc * dc;
  }
  std::vector<Wide> sorted = dist;
  std::sort(sorted.begin(), sorted.end());
  const auto rank = static_cast<std::size_t>(
      std::ceil(options.radius_percentile / 100.0 * static_cast<double>(sorted.size())));
  const Wide cutoff = sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];

  int min_r = labels.rows, max_r = -1, min_c = labels.cols, max_c = -1;
  for (std::size_t i = 0; i < component.size(); ++i) {
    if (dist[i] > cutoff) continue;
    min_r = std::min(min_r, component[i].row);
    max_r = std::max(max_r, component[i].row);
    min_c = std::min(min_c, component[i].col);
    max_c = std::max(max_c, component[i].col);
  }
  return BoundingBox{static_cast<double>(min_c), static_cast<double>(min_r),
                     static_cast<double>(max_r - min_r + 1),
                     static_cast<double>(max_c - min_c + 1)};
}

double BoxIou(const BoundingBox& a, const BoundingBox& b) {
  ValidateBox(a);
  ValidateBox(b);
  const double ix = std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
  const double iy = std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
  // Areas use the same edge differences as the intersection so that
  // identical boxes give exactly 1.
  const double area_a = ((a.x + a.w) - a.x) * ((a.y + a.h) - a.y);
  const double area_b = ((b.x + b.w) - b.x) * ((b.y + b.h) - b.y);
  const double inter = ix * iy;
  const double uni = area_a + area_b - inter;
  return inter / uni;
}

double Top1Accuracy(std::span<const BoxPair> pairs, double threshold) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyCorpus, "no box pairs");
  std::size_t hits = 0;
  for (const auto& [pred, gold] : pairs) {
    if (BoxIou(pred, gold) >= threshold) ++hits;
  }
  return 100.0 * static_cast<double>(hits) / static_cast<double>(pairs.size());
}

}  // namespace docedit
