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

#ifndef DOCEDIT_IMAGE_H_
#define DOCEDIT_IMAGE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace docedit {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kBlack{0, 0, 0};
inline constexpr Rgb kRed{255, 0, 0};

// RGB8, row-major, no padding.
class RasterImage {
 public:
  RasterImage() = default;
  // Throws Error(kInvalidArgument) for a zero dimension.
  RasterImage(int width, int height, Rgb fill = kWhite);

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return pixels_.empty(); }

  Rgb at(int x, int y) const {
    const std::size_t i = Offset(x, y);
    return {pixels_[i], pixels_[i + 1], pixels_[i + 2]};
  }
  void set(int x, int y, Rgb c) {
    const std::size_t i = Offset(x, y);
    pixels_[i] = c.r;
    pixels_[i + 1] = c.g;
    pixels_[i + 2] = c.b;
  }

  const std::vector<std::uint8_t>& bytes() const { return pixels_; }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t Offset(int x, int y) const {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(x)) * 3;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// PNG codec (libpng). Decoding accepts any PNG colour type and converts to
// RGB8; alpha is composited over white. Throws Error(kFormatError).
RasterImage DecodePng(std::string_view bytes);
std::string EncodePng(const RasterImage& image);

RasterImage ReadPng(const std::filesystem::path& path);
void WritePng(const std::filesystem::path& path, const RasterImage& image);

// 8-bit single-channel PNG helpers used for class-index maps.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> values;  // row-major
};

// Accepts 8-bit grayscale or 8-bit palette PNGs and returns raw sample
// values (palette indices are not mapped through the palette).
GrayImage DecodeGrayPng(std::string_view bytes);
std::string EncodeGrayPng(const GrayImage& image);

}  // namespace docedit

#endif  // DOCEDIT_IMAGE_H_
