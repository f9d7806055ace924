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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "docedit/error.h"

namespace docedit {
namespace {

ScoreMap RandomProbs(std::mt19937& rng, int rows, int cols) {
  std::uniform_real_distribution<float> u(0.05f, 1.0f);
  ScoreMap s{rows, cols, kNumClasses, {}};
  for (int p = 0; p < rows * cols; ++p) {
    float v[kNumClasses], sum = 0;
    for (float& x : v) sum += (x = u(rng));
    for (float x : v) s.data.push_back(x / sum);
  }
  return s;
}

LabelMap RandomLabels(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> cls(0, kNumClasses - 1);
  LabelMap m{rows, cols, kNumClasses, {}};
  for (int p = 0; p < rows * cols; ++p) m.labels.push_back(static_cast<std::uint8_t>(cls(rng)));
  return m;
}

TEST(TotalLossTest, Weights) {
  EXPECT_NEAR(TotalLoss(1, 1, 0), 1.8, 1e-15);
  EXPECT_NEAR(TotalLoss(2, 0.5, 0.25), 0.3 * 2 + 1.5 * 0.75, 1e-15);
  EXPECT_NEAR(TotalLoss(1, 1, 1, {.text = 1, .segmentation = 1}), 3.0, 1e-15);
  EXPECT_THROW(TotalLoss(-1, 0, 0), Error);
}

TEST(FocalLossTest, TwoPixelHandValue) {
  // Targets 0 and 1 with target-class probabilities 0.9 and 0.5.
  const ScoreMap probs{1, 2, kNumClasses, {0.9f, 0.05f, 0.05f, 0.25f, 0.5f, 0.25f}};
  const LabelMap target{1, 2, kNumClasses, {0, 1}};
  const double p0 = 0.9f, p1 = 0.5f;
  const double want = -0.25 * ((1 - p0) * (1 - p0) * std::log(p0) + 0.25 * std::log(p1)) / 2;
  EXPECT_NEAR(FocalLoss(probs, target), want, 1e-12);
}

TEST(FocalLossTest, GammaZeroAlphaOneIsCrossEntropy) {
  std::mt19937 rng(6);
  for (int i = 0; i < 20; ++i) {
    const ScoreMap probs = RandomProbs(rng, 6, 5);
    const LabelMap target = RandomLabels(rng, 6, 5);
    double ce = 0;
    for (std::size_t p = 0; p < target.labels.size(); ++p) {
      ce -= std::log(static_cast<double>(probs.data[p * kNumClasses + target.labels[p]]));
    }
    ce /= static_cast<double>(target.labels.size());
    EXPECT_NEAR(FocalLoss(probs, target, {.alpha = 1, .gamma = 0}), ce, 1e-9);
  }
}

TEST(FocalLossTest, ZeroProbability) {
  const ScoreMap probs{1, 1, kNumClasses, {0.0f, 1.0f, 0.0f}};
  const LabelMap target{1, 1, kNumClasses, {0}};
  std::size_t clamped = 0;
  const double loss = FocalLoss(probs, target, {}, &clamped);
  EXPECT_EQ(clamped, 1u);
  EXPECT_NEAR(loss, -0.25 * std::log(1e-12), 1e-9);
  try {
    FocalLoss(probs, target, {.clamp = false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroProbability);
  }
}

TEST(FocalLossPropertyTest, NonNegativeAndBelowCrossEntropy) {
  std::mt19937 rng(12);
  for (int i = 0; i < 50; ++i) {
    const ScoreMap probs = RandomProbs(rng, 4, 4);
    const LabelMap target = RandomLabels(rng, 4, 4);
    const double focal = FocalLoss(probs, target);
    EXPECT_GE(focal, 0.0);
    EXPECT_LE(focal, FocalLoss(probs, target, {.alpha = 1, .gamma = 0}));
  }
}

TEST(DiceLossTest, PerfectPredictionIsZero) {
  std::mt19937 rng(3);
  const LabelMap target = RandomLabels(rng, 16, 16);
  ScoreMap one_hot{16, 16, kNumClasses, std::vector<float>(16 * 16 * kNumClasses, 0.0f)};
  for (std::size_t p = 0; p < target.labels.size(); ++p) one_hot.data[p * kNumClasses + target.labels[p]] = 1;
  EXPECT_LE(DiceLoss(one_hot, target), 1e-5);
}

TEST(DiceLossTest, HandValue) {
  // One pixel of class 0 predicted as (0.5, 0.5, 0). Per class dice:
  // class 0: 2*0.5 / (0.5 + 1); class 1: 0 / 0.5; class 2: 0/0 -> smooth/smooth = 1.
  const ScoreMap probs{1, 1, kNumClasses, {0.5f, 0.5f, 0.0f}};
  const LabelMap target{1, 1, kNumClasses, {0}};
  const double s = 1e-6;
  const double want =
      1.0 - ((1.0 + s) / (1.5 + s) + s / (0.5 + s) + 1.0) / 3.0;
  EXPECT_NEAR(DiceLoss(probs, target), want, 1e-12);
}

TEST(DiceLossPropertyTest, Bounded) {
  std::mt19937 rng(8);
  for (int i = 0; i < 50; ++i) {
    const double d = DiceLoss(RandomProbs(rng, 5, 5), RandomLabels(rng, 5, 5));
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
  }
}

TEST(LossInputTest, ShapeMismatchAndBadProbabilities) {
  const ScoreMap probs{1, 2, kNumClasses, {1, 0, 0, 1, 0, 0}};
  EXPECT_THROW(FocalLoss(probs, LabelMap{1, 1, kNumClasses, {0}}), Error);
  const ScoreMap bad{1, 1, kNumClasses, {1.5f, -0.5f, 0}};
  EXPECT_THROW(DiceLoss(bad, LabelMap{1, 1, kNumClasses, {0}}), Error);
}

}  // namespace
}  // namespace docedit
