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

// Reference implementations of the grounding model's training objective.
// These evaluate the formulas on concrete maps; nothing here trains.

#ifndef DOCEDIT_LOSSES_H_
#define DOCEDIT_LOSSES_H_

#include <cstddef>

#include "docedit/grounding.h"

namespace docedit {

struct FocalParams {
  double alpha = 0.25;
  double gamma = 2.0;
  // p_t is floored here before the log. With clamp = false a zero p_t
  // throws Error(kZeroProbability) instead.
  double min_probability = 1e-12;
  bool clamp = true;
};

// Mean over pixels of -alpha * (1 - p_t)^gamma * log(p_t), where p_t is the
// score of the pixel's target class. `clamped_pixels`, when given, receives
// the number of pixels whose p_t was floored.
double FocalLoss(const ScoreMap& probs, const LabelMap& target, FocalParams params = {},
                 std::size_t* clamped_pixels = nullptr);

// 1 - mean over classes of (2 Σ p·t + smooth) / (Σ p + Σ t + smooth), t the
// one-hot target.
double DiceLoss(const ScoreMap& probs, const LabelMap& target, double smooth = 1e-6);

struct LossWeights {
  double text = 0.3;
  double segmentation = 1.5;
};

// text_weight * text_loss + seg_weight * (focal + dice). Components must be
// non-negative.
double TotalLoss(double text_loss, double seg_focal, double seg_dice, LossWeights weights = {});

}  // namespace docedit

#endif  // DOCEDIT_LOSSES_H_
