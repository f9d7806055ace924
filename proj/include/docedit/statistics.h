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

#ifndef DOCEDIT_STATISTICS_H_
#define DOCEDIT_STATISTICS_H_

#include <span>

namespace docedit {

// Cohen's kappa for two raters' binary decisions, from the 2x2 table.
// Throws Error(kInvalidArgument) on length mismatch, empty input or a value
// other than 0/1; Error(kDegenerateMarginals) when chance agreement is 1.
double CohensKappa(std::span<const int> rater_a, std::span<const int> rater_b);

// Sample Pearson correlation. Throws Error(kInvalidArgument) for mismatched
// lengths or fewer than two points, Error(kConstantVector) when either
// input has zero variance.
double Pearson(std::span<const double> xs, std::span<const double> ys);

}  // namespace docedit

#endif  // DOCEDIT_STATISTICS_H_
