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

#include "docedit/statistics.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "docedit/error.h"
#include "oracles.h"

namespace docedit {
namespace {

using ::docedit::testing::KappaOracle;
using ::docedit::testing::PearsonOracle;

ErrorCode KappaCode(std::vector<int> a, std::vector<int> b) {
  try {
    CohensKappa(a, b);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kInvalidArgument;
}

TEST(CohensKappaTest, HandValues) {
  EXPECT_DOUBLE_EQ(CohensKappa(std::vector{1, 0, 1, 0}, std::vector{1, 0, 1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(CohensKappa(std::vector{1, 0, 1, 0}, std::vector{0, 1, 0, 1}), -1.0);
  // po = 0.7, pe = 0.5*0.6 + 0.5*0.4 = 0.5, kappa = 0.4.
  const std::vector a{1, 1, 1, 1, 1, 0, 0, 0, 0, 0};
  const std::vector b{1, 1, 1, 1, 0, 1, 1, 0, 0, 0};
  EXPECT_NEAR(CohensKappa(a, b), 0.4, 1e-12);
}

TEST(CohensKappaTest, Errors) {
  EXPECT_EQ(KappaCode({}, {}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(KappaCode({1}, {1, 0}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(KappaCode({2, 0}, {1, 0}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(KappaCode({1, 1, 1}, {1, 1, 1}), ErrorCode::kDegenerateMarginals);
  EXPECT_EQ(KappaCode({0, 0}, {0, 0}), ErrorCode::kDegenerateMarginals);
}

TEST(CohensKappaTest, OppositeConstantRatersAreDefined) {
  EXPECT_DOUBLE_EQ(CohensKappa(std::vector{1, 1}, std::vector{0, 0}), 0.0);
}

TEST(CohensKappaTest, MatchesOracleOnRandomDecisions) {
  std::mt19937 rng(77);
  std::bernoulli_distribution coin(0.6);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    std::vector<int> a(2 + i % 40), b(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      a[j] = coin(rng);
      b[j] = coin(rng) ? a[j] : 1 - a[j];
    }
    const double oracle = KappaOracle(a, b);
    if (!std::isfinite(oracle)) continue;
    EXPECT_NEAR(CohensKappa(a, b), oracle, 1e-12);
    EXPECT_LE(CohensKappa(a, b), 1.0 + 1e-12);
    EXPECT_NEAR(CohensKappa(a, b), CohensKappa(b, a), 1e-12);
    ++checked;
  }
  EXPECT_GT(checked, 450);
}

TEST(PearsonTest, HandValues) {
  EXPECT_DOUBLE_EQ(Pearson(std::vector{1.0, 2.0, 3.0}, std::vector{2.0, 4.0, 6.0}), 1.0);
  EXPECT_DOUBLE_EQ(Pearson(std::vector{1.0, 2.0, 3.0}, std::vector{3.0, 2.0, 1.0}), -1.0);
  EXPECT_NEAR(Pearson(std::vector{1.0, 2.0, 3.0, 4.0}, std::vector{1.0, 3.0, 2.0, 4.0}), 0.8, 1e-12);
}

TEST(PearsonTest, Errors) {
  auto code = [](std::vector<double> x, std::vector<double> y) {
    try {
      Pearson(x, y);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code({1}, {1}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code({1, 2}, {1}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code({1, 1, 1}, {1, 2, 3}), ErrorCode::kConstantVector);
  EXPECT_EQ(code({1, 2, 3}, {5, 5, 5}), ErrorCode::kConstantVector);
}

TEST(PearsonTest, MatchesOracleAndIsInvariantUnderAffineMaps) {
  std::mt19937 rng(21);
  std::normal_distribution<double> g(0, 1);
  for (int i = 0; i < 300; ++i) {
    std::vector<double> x(3 + i % 30), y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] = g(rng);
      y[j] = 0.5 * x[j] + g(rng);
    }
    const double r = Pearson(x, y);
    EXPECT_NEAR(r, PearsonOracle(x, y), 1e-9);
    EXPECT_GE(r, -1.0);
    EXPECT_LE(r, 1.0);
    std::vector<double> scaled(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) scaled[j] = 3 * x[j] + 7;
    EXPECT_NEAR(Pearson(scaled, y), r, 1e-9);
    EXPECT_NEAR(Pearson(y, x), r, 1e-12);
  }
}

}  // namespace
}  // namespace docedit
