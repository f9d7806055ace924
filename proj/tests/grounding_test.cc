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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "docedit/error.h"
#include "docedit/seg_io.h"

namespace docedit {
namespace {

LabelMap Background(int rows, int cols) {
  return LabelMap{rows, cols, kNumClasses,
                  std::vector<std::uint8_t>(static_cast<std::size_t>(rows) * cols, kBackgroundClass)};
}

void Fill(LabelMap* m, int row, int col, int h, int w, int cls = kRoiClass) {
  for (int r = row; r < row + h; ++r) {
    for (int c = col; c < col + w; ++c) m->labels[static_cast<std::size_t>(r) * m->cols + c] = cls;
  }
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kInvalidArgument;
}

TEST(MaskToBoxTest, SinglePixel) {
  LabelMap m = Background(10, 10);
  Fill(&m, 5, 7, 1, 1);
  EXPECT_EQ(MaskToBox(m), (BoundingBox{7, 5, 1, 1}));
}

TEST(MaskToBoxTest, BlockAtOrigin) {
  LabelMap m = Background(30, 30);
  Fill(&m, 0, 0, 20, 20);
  const BoundingBox b = MaskToBox(m);
  EXPECT_LE(std::abs(b.x - 0), 1);
  EXPECT_LE(std::abs(b.y - 0), 1);
  EXPECT_LE(std::abs(b.x + b.w - 20), 1);
  EXPECT_LE(std::abs(b.y + b.h - 20), 1);
}

TEST(MaskToBoxTest, AllBackgroundIsEmptyRoi) {
  EXPECT_EQ(CodeOf([] { MaskToBox(Background(4, 4)); }), ErrorCode::kEmptyRoi);
}

TEST(MaskToBoxTest, LargestComponentWins) {
  LabelMap m = Background(40, 40);
  Fill(&m, 1, 1, 3, 3);      // 9 px
  Fill(&m, 20, 20, 6, 5);    // 30 px
  Fill(&m, 10, 30, 1, 1);
  const BoundingBox b = MaskToBox(m, {.radius_percentile = 100});
  EXPECT_EQ(b, (BoundingBox{20, 20, 6, 5}));
}

TEST(MaskToBoxTest, DiagonalNeighboursAreConnected) {
  LabelMap m = Background(10, 10);
  for (int i = 0; i < 6; ++i) Fill(&m, i, i, 1, 1);
  Fill(&m, 8, 0, 2, 2);  // 4 px, smaller than the 6 px diagonal
  EXPECT_EQ(LargestComponent(m, kRoiClass).size(), 6u);
}

TEST(MaskToBoxTest, FullPercentileIsTightBox) {
  std::mt19937 rng(4);
  std::bernoulli_distribution on(0.6);
  for (int trial = 0; trial < 50; ++trial) {
    LabelMap m = Background(12, 12);
    for (int r = 2; r < 10; ++r) {
      for (int c = 2; c < 10; ++c) {
        if (on(rng)) m.labels[r * 12 + c] = kRoiClass;
      }
    }
    Fill(&m, 5, 2, 1, 8);  // spine keeps the region connected
    Fill(&m, 2, 5, 8, 1);
    const std::vector<Pixel> comp = LargestComponent(m, kRoiClass);
    int r0 = 99, r1 = -1, c0 = 99, c1 = -1;
    for (const Pixel& p : comp) {
      r0 = std::min(r0, p.row), r1 = std::max(r1, p.row);
      c0 = std::min(c0, p.col), c1 = std::max(c1, p.col);
    }
    EXPECT_EQ(MaskToBox(m, {.radius_percentile = 100}),
              (BoundingBox{double(c0), double(r0), double(r1 - r0 + 1), double(c1 - c0 + 1)}));
  }
}

TEST(MaskToBoxTest, PercentileFilterShavesOutliers) {
  // 1x20 strip: distances come in mirror pairs 0.5, 1.5, ..., 9.5. The
  // nearest-rank 95th percentile is the 19th smallest, which is 9.5, so
  // both end pixels share the cutoff and survive.
  LabelMap m = Background(3, 60);
  Fill(&m, 1, 5, 1, 20);
  EXPECT_EQ(MaskToBox(m), (BoundingBox{5, 1, 1, 20}));
  // 1x41 strip: distances 0, then pairs 1..20. The 39th smallest is 19, so
  // the two end pixels at distance 20 are dropped.
  LabelMap odd = Background(3, 60);
  Fill(&odd, 1, 5, 1, 41);
  EXPECT_EQ(MaskToBox(odd), (BoundingBox{6, 1, 1, 39}));
}

TEST(MaskToBoxPropertyTest, BoxLiesInsideComponentHull) {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> pos(0, 29), len(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    LabelMap m = Background(42, 42);
    const int r = pos(rng), c = pos(rng), h = len(rng), w = len(rng);
    Fill(&m, r, c, h, w);
    const BoundingBox b = MaskToBox(m);
    EXPECT_GE(b.x, c);
    EXPECT_GE(b.y, r);
    EXPECT_LE(b.x + b.w, c + w);
    EXPECT_LE(b.y + b.h, r + h);
    EXPECT_GT(b.w, 0);
    EXPECT_GT(b.h, 0);
  }
}

TEST(MaskToBoxPropertyTest, NearSquareRectanglesRecoveredThroughPng) {
  std::mt19937 rng(55);
  std::uniform_int_distribution<int> side(10, 64), off(0, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const int h = side(rng);
    const int w = std::clamp(h + std::uniform_int_distribution<int>(-h / 2, h / 2)(rng), 10, 64);
    const int r = off(rng), c = off(rng);
    LabelMap m = Background(90, 90);
    Fill(&m, r, c, h, w);
    const BoundingBox b = MaskToBox(DecodeLabelPng(EncodeLabelPng(m)));
    EXPECT_LE(std::abs(b.x - c), 1) << h << "x" << w;
    EXPECT_LE(std::abs(b.y - r), 1) << h << "x" << w;
    EXPECT_LE(std::abs(b.x + b.w - (c + w)), 1) << h << "x" << w;
    EXPECT_LE(std::abs(b.y + b.h - (r + h)), 1) << h << "x" << w;
  }
}

TEST(BoxIouTest, Cases) {
  const BoundingBox a{0, 0, 2, 2};
  EXPECT_DOUBLE_EQ(BoxIou(a, a), 1.0);
  EXPECT_DOUBLE_EQ(BoxIou(a, {10, 10, 2, 2}), 0.0);
  EXPECT_DOUBLE_EQ(BoxIou(a, {1, 0, 2, 2}), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(BoxIou(a, {2, 0, 2, 2}), 0.0);  // touching edges
  EXPECT_EQ(CodeOf([&] { BoxIou(a, {0, 0, 0, 2}); }), ErrorCode::kInvalidArgument);
}

TEST(BoxIouPropertyTest, SymmetricBoundedAndOneOnlyForEqual) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> pos(0, 50), len(0.5, 30);
  for (int i = 0; i < 1000; ++i) {
    const BoundingBox a{pos(rng), pos(rng), len(rng), len(rng)};
    const BoundingBox b{pos(rng), pos(rng), len(rng), len(rng)};
    const double iou = BoxIou(a, b);
    EXPECT_DOUBLE_EQ(iou, BoxIou(b, a));
    EXPECT_GE(iou, 0.0);
    EXPECT_LT(iou, 1.0);
    EXPECT_DOUBLE_EQ(BoxIou(a, a), 1.0);
  }
}

TEST(Top1AccuracyTest, ThresholdIsInclusive) {
  // (0,0,1,2) vs (0,0,1,1): intersection 1, union 2, IoU exactly 0.5.
  const BoundingBox gold{0, 0, 1, 1};
  const BoundingBox pred{0, 0, 1, 2};
  ASSERT_EQ(BoxIou(pred, gold), 0.5);
  const std::vector<BoxPair> at{{pred, gold}};
  EXPECT_DOUBLE_EQ(Top1Accuracy(at), 100.0);
  const std::vector<BoxPair> below{{BoundingBox{0, 0, 1, 3}, gold}};
  EXPECT_DOUBLE_EQ(Top1Accuracy(below), 0.0);
  const std::vector<BoxPair> mixed{{pred, gold}, {BoundingBox{5, 5, 1, 1}, gold}};
  EXPECT_DOUBLE_EQ(Top1Accuracy(mixed), 50.0);
  EXPECT_EQ(CodeOf([] { Top1Accuracy({}); }), ErrorCode::kEmptyCorpus);
}

TEST(ValidateBoxTest, Bounds) {
  EXPECT_NO_THROW(ValidateBox({0, 0, 10, 10}, 10, 10));
  EXPECT_EQ(CodeOf([] { ValidateBox({1, 0, 10, 10}, 10, 10); }), ErrorCode::kBoxOutOfBounds);
  EXPECT_EQ(CodeOf([] { ValidateBox({0, 0, -1, 3}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { ValidateBox({0, 0, NAN, 3}); }), ErrorCode::kInvalidArgument);
}

ScoreMap RandomScores(std::mt19937& rng, int rows, int cols) {
  std::uniform_real_distribution<float> u(0.01f, 1.0f);
  ScoreMap s{rows, cols, kNumClasses, {}};
  for (int p = 0; p < rows * cols; ++p) {
    float v[kNumClasses], sum = 0;
    for (float& x : v) sum += (x = u(rng));
    for (float x : v) s.data.push_back(x / sum);
  }
  return s;
}

TEST(ScoreMapTest, NormalizationIsValidated) {
  ScoreMap s{1, 2, kNumClasses, {0.2f, 0.3f, 0.5f, 0.6f, 0.6f, 0.0f}};
  EXPECT_EQ(CodeOf([&] { ValidateScoreMap(s); }), ErrorCode::kNotNormalized);
  s.data[3] = 0.4f;
  EXPECT_NO_THROW(ValidateScoreMap(s));
  s.data.pop_back();
  EXPECT_EQ(CodeOf([&] { ValidateScoreMap(s); }), ErrorCode::kInvalidArgument);
}

TEST(ScoreMapPropertyTest, ArgmaxOfOneHotIsIdentity) {
  std::mt19937 rng(31);
  for (int i = 0; i < 50; ++i) {
    const LabelMap labels = ArgmaxLabels(RandomScores(rng, 7, 9));
    const LabelMap again = ArgmaxLabels(OneHot(labels));
    EXPECT_EQ(again.labels, labels.labels);
    EXPECT_EQ(ArgmaxLabels(OneHot(again)).labels, labels.labels);
  }
}

TEST(ScoreMapTest, ArgmaxTiesPickLowestClass) {
  const ScoreMap s{1, 1, kNumClasses, {0.4f, 0.4f, 0.2f}};
  EXPECT_EQ(ArgmaxLabels(s).labels, (std::vector<std::uint8_t>{0}));
}

TEST(SegIoTest, SegF32RoundTripIsBitExact) {
  std::mt19937 rng(2);
  const ScoreMap s = RandomScores(rng, 5, 4);
  const std::string bytes = EncodeSegF32(s);
  ASSERT_EQ(bytes.size(), 12u + 5 * 4 * 3 * 4);
  // Header is three little-endian u32: rows, cols, k.
  EXPECT_EQ(static_cast<unsigned char>(bytes[0]), 5);
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 4);
  EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 3);
  const ScoreMap back = DecodeSegF32(bytes);
  EXPECT_EQ(back.rows, 5);
  EXPECT_EQ(back.cols, 4);
  EXPECT_EQ(back.data, s.data);
}

TEST(SegIoTest, SegF32Errors) {
  EXPECT_EQ(CodeOf([] { DecodeSegF32("short"); }), ErrorCode::kFormatError);
  std::mt19937 rng(2);
  std::string bytes = EncodeSegF32(RandomScores(rng, 2, 2));
  bytes.pop_back();
  EXPECT_EQ(CodeOf([&] { DecodeSegF32(bytes); }), ErrorCode::kFormatError);
}

TEST(SegIoTest, LabelPngRoundTrip) {
  LabelMap m = Background(17, 23);
  Fill(&m, 3, 4, 5, 6);
  Fill(&m, 10, 10, 2, 2, kRequestTextClass);
  const LabelMap back = DecodeLabelPng(EncodeLabelPng(m));
  EXPECT_EQ(back.rows, 17);
  EXPECT_EQ(back.cols, 23);
  EXPECT_EQ(back.labels, m.labels);
}

TEST(SegIoTest, LabelOutOfRangeIsRejected) {
  LabelMap m = Background(2, 2);
  m.labels[0] = 7;
  EXPECT_EQ(CodeOf([&] { EncodeLabelPng(m); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace docedit
