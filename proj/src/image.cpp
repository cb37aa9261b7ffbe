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

#include "castchaos/image.hpp"

#include <string>

#include "castchaos/error.hpp"

namespace castchaos {

namespace {

void CheckChannels(int channels) {
  if (channels != 1 && channels != 3) {
    throw Error(ErrorCode::kBadDimensions,
                "images must have 1 or 3 channels, got " +
                    std::to_string(channels));
  }
}

}  // namespace

ImageBuffer::ImageBuffer(std::uint32_t width, std::uint32_t height,
                         int channels)
    : width_(width), height_(height), channels_(channels) {
  CheckChannels(channels);
  pixels_.assign(plane_size() * channels, 0);
}

ImageBuffer::ImageBuffer(std::uint32_t width, std::uint32_t height,
                         int channels, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), channels_(channels),
      pixels_(std::move(pixels)) {
  CheckChannels(channels);
  if (pixels_.size() != plane_size() * channels) {
    throw Error(ErrorCode::kBadDimensions,
                "pixel buffer holds " + std::to_string(pixels_.size()) +
                    " samples, expected " +
                    std::to_string(plane_size() * channels));
  }
}

std::vector<std::uint8_t> ImageBuffer::Plane(int ch) const {
  std::vector<std::uint8_t> plane(plane_size());
  for (std::size_t i = 0; i < plane.size(); ++i) {
    plane[i] = pixels_[i * channels_ + ch];
  }
  return plane;
}

void ImageBuffer::SetPlane(int ch, std::span<const std::uint8_t> plane) {
  if (plane.size() != plane_size()) {
    throw Error(ErrorCode::kBadDimensions, "plane size mismatch");
  }
  for (std::size_t i = 0; i < plane.size(); ++i) {
    pixels_[i * channels_ + ch] = plane[i];
  }
}

std::uint8_t Luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  return static_cast<std::uint8_t>((77u * r + 150u * g + 29u * b + 128u) >> 8);
}

ImageBuffer ToGrayscale(const ImageBuffer& img) {
  if (img.channels() == 1) return img;
  ImageBuffer out(img.width(), img.height(), 1);
  const auto& src = img.pixels();
  auto& dst = out.mutable_pixels();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = Luma(src[3 * i], src[3 * i + 1], src[3 * i + 2]);
  }
  return out;
}

ImageBuffer ResizeNearest(const ImageBuffer& img, std::uint32_t width,
                          std::uint32_t height) {
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::kBadDimensions, "resize target must be non-empty");
  }
  if (width == img.width() && height == img.height()) return img;
  ImageBuffer out(width, height, img.channels());
  for (std::uint32_t row = 0; row < height; ++row) {
    const auto src_row = static_cast<std::uint32_t>(
        std::uint64_t{row} * img.height() / height);
    for (std::uint32_t col = 0; col < width; ++col) {
      const auto src_col = static_cast<std::uint32_t>(
          std::uint64_t{col} * img.width() / width);
      for (int ch = 0; ch < img.channels(); ++ch) {
        out.at(row, col, ch) = img.at(src_row, src_col, ch);
      }
    }
  }
  return out;
}

ImageBuffer Preprocess(const ImageBuffer& img, const PreprocessOptions& opts) {
  ImageBuffer out = opts.grayscale ? ToGrayscale(img) : img;
  const std::uint32_t w = opts.width ? opts.width : out.width();
  const std::uint32_t h = opts.height ? opts.height : out.height();
  out = ResizeNearest(out, w, h);
  if (out.plane_size() % 8 != 0) {
    throw Error(ErrorCode::kBadDimensions,
                std::to_string(w) + "x" + std::to_string(h) +
                    " is not a whole number of 8-byte blocks per channel");
  }
  return out;
}

}  // namespace castchaos
