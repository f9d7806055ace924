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

// Exchange formats for segmentation maps.
//
// .segf32: three little-endian uint32 header words {rows, cols, k}, then
// rows*cols*k little-endian IEEE-754 float32 values, row-major with the
// class index varying fastest. No padding, no trailer.
//
// Class-index PNG: 8-bit grayscale (or 8-bit palette) where the sample value
// is the class index.

#ifndef DOCEDIT_SEG_IO_H_
#define DOCEDIT_SEG_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "docedit/grounding.h"

namespace docedit {

// Throws Error(kFormatError) on a short or oversized buffer.
ScoreMap DecodeSegF32(std::string_view bytes);
std::string EncodeSegF32(const ScoreMap& scores);

// Throws Error(kFormatError) for unsupported PNGs and
// Error(kInvalidArgument) for values >= k.
LabelMap DecodeLabelPng(std::string_view bytes, int k = kNumClasses);
std::string EncodeLabelPng(const LabelMap& labels);

// Dispatches on extension: ".segf32" goes through ArgmaxLabels, anything
// else is read as a class-index PNG.
LabelMap LoadLabelMap(const std::filesystem::path& path);

}  // namespace docedit

#endif  // DOCEDIT_SEG_IO_H_
