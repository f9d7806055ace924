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

// Segmentation-map post-processing: class scores -> labels -> region of
// interest box, plus the box-level grounding metrics.
//
// Class layout: 0 = region of interest, 1 = rendered request text,
// 2 = rest of the document.

#ifndef DOCEDIT_GROUNDING_H_
#define DOCEDIT_GROUNDING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace docedit {

inline constexpr int kNumClasses = 3;
inline constexpr int kRoiClass = 0;
inline constexpr int kRequestTextClass = 1;
inline constexpr int kBackgroundClass = 2;

inline constexpr double kNormalizationTolerance = 1e-4;

// (x, y) is the top-left corner; h and w are extents in pixels.
struct BoundingBox {
  double x = 0;
  double y = 0;
  double h = 0;
  double w = 0;

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

// Throws Error(kInvalidArgument) unless h > 0 and w > 0; when image
// dimensions are given also requires the box to lie inside the image.
void ValidateBox(const BoundingBox& box);
void ValidateBox(const BoundingBox& box, int image_width, int image_height);

// Per-pixel class probabilities, pixel-major with the class index innermost.
struct ScoreMap {
  int rows = 0;
  int cols = 0;
  int k = kNumClasses;
  std::vector<float> data;

  float at(int r, int c, int cls) const {
    return data[(static_cast<std::size_t>(r) * cols + c) * k + cls];
  }
};

// Per-pixel class indices in [0, k).
struct LabelMap {
  int rows = 0;
  int cols = 0;
  int k = kNumClasses;
  std::vector<std::uint8_t> labels;

  std::uint8_t at(int r, int c) const { return labels[static_cast<std::size_t>(r) * cols + c]; }
};

struct Pixel {
  int row = 0;
  int col = 0;

  friend bool operator==(const Pixel&, const Pixel&) = default;
};

// Checks sizes and that every pixel's scores sum to 1 within
// kNormalizationTolerance. Throws Error(kNotNormalized / kInvalidArgument).
void ValidateScoreMap(const ScoreMap& scores);
void ValidateLabelMap(const LabelMap& labels);

// Ties go to the lowest class index, so borderline pixels favour the RoI.
LabelMap ArgmaxLabels(const ScoreMap& scores);

// One-hot re-encoding of a label map.
ScoreMap OneHot(const LabelMap& labels);

// Largest 8-connected component of `cls`, pixels in raster order. Ties
// between equally large components go to the one met first in raster order.
std::vector<Pixel> LargestComponent(const LabelMap& labels, int cls);

struct MaskToBoxOptions {
  // Pixels farther from the component centroid than this percentile of
  // centroid distances (nearest-rank, inclusive) are discarded.
  double radius_percentile = 95.0;
};

// Largest RoI component -> centroid-distance filter -> extremes of the
// surviving pixels. Throws Error(kEmptyRoi) when no RoI pixel exists.
BoundingBox MaskToBox(const LabelMap& labels, MaskToBoxOptions options = {});

// Jaccard overlap of two axis-aligned boxes.
double BoxIou(const BoundingBox& a, const BoundingBox& b);

inline constexpr double kTop1Threshold = 0.5;

using BoxPair = std::pair<BoundingBox, BoundingBox>;  // (pred, gold)

// Percentage of pairs with IoU >= threshold. Throws Error(kEmptyCorpus).
double Top1Accuracy(std::span<const BoxPair> pairs, double threshold = kTop1Threshold);

}  // namespace docedit

#endif  // DOCEDIT_GROUNDING_H_
