// Copyright 2026 The castchaos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace castchaos {

// 8-bit image, samples interleaved row-major (RGBRGB... for 3 channels).
class ImageBuffer {
 public:
  ImageBuffer() = default;
  // Zero-filled image. channels must be 1 or 3.
  ImageBuffer(std::uint32_t width, std::uint32_t height, int channels);
  // Takes ownership of interleaved samples; throws Error(kBadDimensions) on
  // a size mismatch.
  ImageBuffer(std::uint32_t width, std::uint32_t height, int channels,
              std::vector<std::uint8_t> pixels);

  std::uint32_t width() const { return width_; }
  std::uint32_t height() const { return height_; }
  int channels() const { return channels_; }
  std::size_t plane_size() const {
    return std::size_t{width_} * height_;
  }
  const std::vector<std::uint8_t>& pixels() const { return pixels_; }
  std::vector<std::uint8_t>& mutable_pixels() { return pixels_; }

  std::uint8_t at(std::uint32_t row, std::uint32_t col, int ch = 0) const {
    return pixels_[(std::size_t{row} * width_ + col) * channels_ + ch];
  }
  std::uint8_t& at(std::uint32_t row, std::uint32_t col, int ch = 0) {
    return pixels_[(std::size_t{row} * width_ + col) * channels_ + ch];
  }

  // Row-major samples of one channel.
  std::vector<std::uint8_t> Plane(int ch) const;
  void SetPlane(int ch, std::span<const std::uint8_t> plane);

  friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

 private:
  std::uint32_t width_ = 0;
  std::uint32_t height_ = 0;
  int channels_ = 1;
  std::vector<std::uint8_t> pixels_;
};

// Integer luma (77 R + 150 G + 29 B + 128) >> 8.
std::uint8_t Luma(std::uint8_t r, std::uint8_t g, std::uint8_t b);

ImageBuffer ToGrayscale(const ImageBuffer& img);

// Nearest neighbour: dst(i, j) = src(i * h_src / h_dst, j * w_src / w_dst).
ImageBuffer ResizeNearest(const ImageBuffer& img, std::uint32_t width,
                          std::uint32_t height);

struct PreprocessOptions {
  // 0 keeps the source dimension.
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  bool grayscale = false;
};

// Optional grayscale conversion followed by nearest-neighbour resize.
// Throws Error(kBadDimensions) if a target is zero-area or the resulting
// plane size is not a multiple of 8 bytes.
ImageBuffer Preprocess(const ImageBuffer& img, const PreprocessOptions& opts);

}  // namespace castchaos
