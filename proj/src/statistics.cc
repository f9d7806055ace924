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

#include <algorithm>
#include <cmath>

#include "docedit/error.h"

namespace docedit {

double CohensKappa(std::span<const int> rater_a, std::span<const int> rater_b) {
  if (rater_a.size() != rater_b.size() || rater_a.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "kappa needs two equal-length, non-empty vectors");
  }
  // table[a][b] counts items rated a by the first rater and b by the second.
  double table[2][2] = {{0, 0}, {0, 0}};
  for (std::size_t i = 0; i < rater_a.size(); ++i) {
    const int a = rater_a[i];
    const int b = rater_b[i];
    if ((a != 0 && a != 1) || (b != 0 && b != 1)) {
      throw Error(ErrorCode::kInvalidArgument, "kappa decisions must be 0 or 1");
    }
    table[a][b] += 1;
  }
  const double n = static_cast<double>(rater_a.size());
  const double p_o = (table[0][0] + table[1][1]) / n;
  const double a1 = (table[1][0] + table[1][1]) / n;
  const double b1 = (table[0][1] + table[1][1]) / n;
  const double p_e = a1 * b1 + (1 - a1) * (1 - b1);
  if (p_e >= 1.0) {
    throw Error(ErrorCode::kDegenerateMarginals,
                "both raters gave one identical constant decision; kappa is undefined");
  }
  return (p_o - p_e) / (1 - p_e);
}

double Pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "pearson needs two equal-length vectors of size >= 2");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0;
  double sxx = 0;
  double syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) throw Error(ErrorCode::kConstantVector, "input vector is constant");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace docedit
