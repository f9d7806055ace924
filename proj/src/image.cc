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

#include "docedit/image.h"

#include <png.h>

#include <csetjmp>
#include <cstring>

#include "docedit/error.h"
#include "docedit/io.h"

namespace docedit {
namespace {

struct MemoryReader {
  const unsigned char* data;
  std::size_t size;
  std::size_t offset;
};

void ReadFromMemory(png_structp png, png_bytep out, png_size_t length) {
  auto* reader = static_cast<MemoryReader*>(png_get_io_ptr(png));
  if (reader->offset + length > reader->size) png_error(png, "truncated PNG data");
  std::memcpy(out, reader->data + reader->offset, length);
  reader->offset += length;
}

// Low-level read that keeps raw 8-bit samples. Only trivially destructible
// state lives across the setjmp.
bool ReadRawGray(const unsigned char* data, std::size_t size, GrayImage* out,
                 std::vector<png_bytep>* rows, const char** error) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) {
    *error = "png_create_read_struct failed";
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    *error = "png_create_info_struct failed";
    return false;
  }
  MemoryReader reader{data, size, 0};
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    if (*error == nullptr) *error = "corrupt PNG";
    return false;
  }
  png_set_read_fn(png, &reader, ReadFromMemory);
  png_read_info(png, info);
  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int color_type = png_get_color_type(png, info);
  const int bit_depth = png_get_bit_depth(png, info);
  if (bit_depth != 8 ||
      (color_type != PNG_COLOR_TYPE_GRAY && color_type != PNG_COLOR_TYPE_PALETTE)) {
    *error = "class-index PNG must be 8-bit grayscale or 8-bit palette";
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }
  if (png_get_interlace_type(png, info) != PNG_INTERLACE_NONE) png_set_interlace_handling(png);
  png_read_update_info(png, info);
  out->width = static_cast<int>(width);
  out->height = static_cast<int>(height);
  out->values.assign(static_cast<std::size_t>(width) * height, 0);
  rows->resize(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    (*rows)[y] = out->values.data() + static_cast<std::size_t>(y) * width;
  }
  png_read_image(png, rows->data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return true;
}

std::string WriteSimplified(png_image* image, const void* buffer) {
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(image, nullptr, &size, 0, buffer, 0, nullptr)) {
    throw Error(ErrorCode::kFormatError, std::string("PNG encode failed: ") + image->message);
  }
  std::string out(size, '\0');
  if (!png_image_write_to_memory(image, out.data(), &size, 0, buffer, 0, nullptr)) {
    throw Error(ErrorCode::kFormatError, std::string("PNG encode failed: ") + image->message);
  }
  out.resize(size);
  return out;
}

}  // namespace

RasterImage::RasterImage(int width, int height, Rgb fill) : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "image dimensions must be positive");
  }
  pixels_.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3);
  for (std::size_t i = 0; i < pixels_.size(); i += 3) {
    pixels_[i] = fill.r;
    pixels_[i + 1] = fill.g;
    pixels_[i + 2] = fill.b;
  }
}

RasterImage DecodePng(std::string_view bytes) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw Error(ErrorCode::kFormatError, std::string("PNG decode failed: ") + image.message);
  }
  image.format = PNG_FORMAT_RGB;
  RasterImage result(static_cast<int>(image.width), static_cast<int>(image.height));
  std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(image));
  png_color background{255, 255, 255};
  if (!png_image_finish_read(&image, &background, buffer.data(), 0, nullptr)) {
    png_image_free(&image);
    throw Error(ErrorCode::kFormatError, std::string("PNG decode failed: ") + image.message);
  }
  for (int y = 0; y < result.height(); ++y) {
    for (int x = 0; x < result.width(); ++x) {
      const std::size_t i = (static_cast<std::size_t>(y) * result.width() + x) * 3;
      result.set(x, y, {buffer[i], buffer[i + 1], buffer[i + 2]});
    }
  }
  return result;
}

std::string EncodePng(const RasterImage& image) {
  if (image.empty()) throw Error(ErrorCode::kInvalidArgument, "cannot encode an empty image");
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(image.width());
  png.height = static_cast<png_uint_32>(image.height());
  png.format = PNG_FORMAT_RGB;
  return WriteSimplified(&png, image.bytes().data());
}

RasterImage ReadPng(const std::filesystem::path& path) { return DecodePng(ReadFile(path)); }

void WritePng(const std::filesystem::path& path, const RasterImage& image) {
  WriteFileAtomic(path, EncodePng(image));
}

GrayImage DecodeGrayPng(std::string_view bytes) {
  GrayImage out;
  std::vector<png_bytep> rows;
  const char* error = nullptr;
  if (!ReadRawGray(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), &out,
                   &rows, &error)) {
    throw Error(ErrorCode::kFormatError, error);
  }
  return out;
}

std::string EncodeGrayPng(const GrayImage& image) {
  if (image.width <= 0 || image.height <= 0 ||
      image.values.size() != static_cast<std::size_t>(image.width) * image.height) {
    throw Error(ErrorCode::kInvalidArgument, "gray image size mismatch");
  }
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(image.width);
  png.height = static_cast<png_uint_32>(image.height);
  png.format = PNG_FORMAT_GRAY;
  return WriteSimplified(&png, image.values.data());
}

}  // namespace docedit
