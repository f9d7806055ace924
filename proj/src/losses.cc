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

#include "docedit/losses.h"

#include <cmath>
#include <string>
#include <vector>

#include "docedit/error.h"

namespace docedit {
namespace {

void CheckPair(const ScoreMap& probs, const LabelMap& target) {
  ValidateLabelMap(target);
  if (probs.rows != target.rows || probs.cols != target.cols || probs.k != target.k ||
      probs.data.size() != target.labels.size() * static_cast<std::size_t>(probs.k)) {
    throw Error(ErrorCode::kInvalidArgument, "score map and target differ in shape");
  }
  for (float p : probs.data) {
    if (!(p >= 0.0f && p <= 1.0f)) {
      throw Error(ErrorCode::kInvalidArgument, "probability outside [0, 1]");
    }
  }
}

}  // namespace

double FocalLoss(const ScoreMap& probs, const LabelMap& target, FocalParams params,
                 std::size_t* clamped_pixels) {
  CheckPair(probs, target);
  std::size_t clamped = 0;
  double sum = 0;
  const std::size_t pixels = target.labels.size();
  for (std::size_t p = 0; p < pixels; ++p) {
    double pt = probs.data[p * probs.k + target.labels[p]];
    if (pt < params.min_probability) {
      if (!params.clamp && pt <= 0.0) {
        throw Error(ErrorCode::kZeroProbability,
                    "target-class probability is 0 at pixel " + std::to_string(p));
      }
      if (params.clamp) {
        pt = params.min_probability;
        ++clamped;
      }
    }
    sum += -params.alpha * std::pow(1.0 - pt, params.gamma) * std::log(pt);
  }
  if (clamped_pixels != nullptr) *clamped_pixels = clamped;
  return sum / static_cast<double>(pixels);
}

double DiceLoss(const ScoreMap& probs, const LabelMap& target, double smooth) {
  CheckPair(probs, target);
  std::vector<double> intersection(probs.k, 0.0);
  std::vector<double> prob_mass(probs.k, 0.0);
  std::vector<double> target_mass(probs.k, 0.0);
  for (std::size_t p = 0; p < target.labels.size(); ++p) {
    for (int c = 0; c < probs.k; ++c) prob_mass[c] += probs.data[p * probs.k + c];
    const int t = target.labels[p];
    intersection[t] += probs.data[p * probs.k + t];
    target_mass[t] += 1.0;
  }
  double dice_sum = 0;
  for (int c = 0; c < probs.k; ++c) {
    dice_sum += (2.0 * intersection[c] + smooth) / (prob_mass[c] + target_mass[c] + smooth);
  }
  return 1.0 - dice_sum / probs.k;
}

double TotalLoss(double text_loss, double seg_focal, double seg_dice, LossWeights weights) {
  if (text_loss < 0 || seg_focal < 0 || seg_dice < 0) {
    throw Error(ErrorCode::kInvalidArgument, "loss components must be non-negative");
  }
  return weights.text * text_loss + weights.segmentation * (seg_focal + seg_dice);
}

}  // namespace docedit
