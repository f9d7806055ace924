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

#include "docedit/seg_io.h"

#include <bit>
#include <cstdint>
#include <cstring>

#include "docedit/error.h"
#include "docedit/image.h"
#include "docedit/io.h"

namespace docedit {
namespace {

constexpr std::size_t kHeaderBytes = 12;

std::uint32_t LoadU32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void StoreU32(std::uint32_t v, std::string* out) {
  for (int shift = 0; shift < 32; shift += 8) {
    out->push_back(static_cast<char>((v >> shift) & 0xFF));
  }
}

}  // namespace

ScoreMap DecodeSegF32(std::string_view bytes) {
  if (bytes.size() < kHeaderBytes) throw Error(ErrorCode::kFormatError, "segf32 header truncated");
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::uint32_t rows = LoadU32(p);
  const std::uint32_t cols = LoadU32(p + 4);
  const std::uint32_t k = LoadU32(p + 8);
  if (rows == 0 || cols == 0 || k == 0 || k > 255) {
    throw Error(ErrorCode::kFormatError, "segf32 header has a zero or oversized dimension");
  }
  const std::uint64_t count = static_cast<std::uint64_t>(rows) * cols * k;
  if (bytes.size() - kHeaderBytes != count * 4) {
    throw Error(ErrorCode::kFormatError, "segf32 payload is " +
                                             std::to_string(bytes.size() - kHeaderBytes) +
                                             " bytes, header implies " + std::to_string(count * 4));
  }
  ScoreMap map{static_cast<int>(rows), static_cast<int>(cols), static_cast<int>(k), {}};
  map.data.resize(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    map.data[i] = std::bit_cast<float>(LoadU32(p + kHeaderBytes + i * 4));
  }
  return map;
}

std::string EncodeSegF32(const ScoreMap& scores) {
  const std::size_t count = static_cast<std::size_t>(scores.rows) * scores.cols * scores.k;
  if (scores.rows <= 0 || scores.cols <= 0 || scores.k <= 0 || scores.data.size() != count) {
    throw Error(ErrorCode::kInvalidArgument, "score map shape does not match its data");
  }
  std::string out;
  out.reserve(kHeaderBytes + count * 4);
  StoreU32(static_cast<std::uint32_t>(scores.rows), &out);
  StoreU32(static_cast<std::uint32_t>(scores.cols), &out);
  StoreU32(static_cast<std::uint32_t>(scores.k), &out);
  for (float v : scores.data) StoreU32(std::bit_cast<std::uint32_t>(v), &out);
  return out;
}

LabelMap DecodeLabelPng(std::string_view bytes, int k) {
  GrayImage gray = DecodeGrayPng(bytes);
  LabelMap map{gray.height, gray.width, k, std::move(gray.values)};
  ValidateLabelMap(map);
  return map;
}

std::string EncodeLabelPng(const LabelMap& labels) {
  ValidateLabelMap(labels);
  return EncodeGrayPng(GrayImage{labels.cols, labels.rows, labels.labels});
}

LabelMap LoadLabelMap(const std::filesystem::path& path) {
  const std::string bytes = ReadFile(path);
  if (path.extension() == ".segf32") return ArgmaxLabels(DecodeSegF32(bytes));
  return DecodeLabelPng(bytes);
}

}  // namespace docedit
