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

#include "castchaos/netpbm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>

#include "castchaos/error.hpp"

namespace castchaos {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> data) : data_(data) {}

  // Skips whitespace and '#' comments, then reads a decimal integer.
  std::uint64_t Number() {
    SkipSpace();
    if (pos_ >= data_.size() || !std::isdigit(data_[pos_])) {
      throw Error(ErrorCode::kFormat, "malformed netpbm header");
    }
    std::uint64_t v = 0;
    while (pos_ < data_.size() && std::isdigit(data_[pos_])) {
      v = v * 10 + (data_[pos_++] - '0');
      if (v > 0xFFFFFFFFull) {
        throw Error(ErrorCode::kFormat, "netpbm dimension out of range");
      }
    }
    return v;
  }

  // Exactly one whitespace byte separates the header from the raster.
  std::size_t RasterStart() {
    if (pos_ >= data_.size() || !std::isspace(data_[pos_])) {
      throw Error(ErrorCode::kFormat, "malformed netpbm header");
    }
    return pos_ + 1;
  }

 private:
  void SkipSpace() {
    while (pos_ < data_.size()) {
      if (std::isspace(data_[pos_])) {
        ++pos_;
      } else if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 2;
};

}  // namespace

ImageBuffer ParseNetpbm(std::span<const std::uint8_t> data) {
  if (data.size() < 2 || data[0] != 'P' || (data[1] != '5' && data[1] != '6')) {
    throw Error(ErrorCode::kFormat, "not a binary PGM (P5) or PPM (P6) file");
  }
  const int channels = data[1] == '5' ? 1 : 3;
  HeaderReader reader(data);
  const auto width = reader.Number();
  const auto height = reader.Number();
  const auto maxval = reader.Number();
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::kFormat, "netpbm image has zero area");
  }
  if (maxval != 255) {
    throw Error(ErrorCode::kFormat,
                "only maxval 255 is supported, got " + std::to_string(maxval));
  }
  const std::size_t start = reader.RasterStart();
  const std::size_t count = width * height * channels;
  if (data.size() - start < count) {
    throw Error(ErrorCode::kFormat, "netpbm raster is truncated");
  }
  std::vector<std::uint8_t> pixels(data.begin() + start,
                                   data.begin() + start + count);
  return ImageBuffer(static_cast<std::uint32_t>(width),
                     static_cast<std::uint32_t>(height), channels,
                     std::move(pixels));
}

std::vector<std::uint8_t> EncodeNetpbm(const ImageBuffer& img) {
  const std::string header = std::string(img.channels() == 1 ? "P5" : "P6") +
                             "\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

ImageBuffer ReadNetpbm(const std::filesystem::path& path) {
  return ParseNetpbm(ReadFileBytes(path));
}

void WriteNetpbm(const std::filesystem::path& path, const ImageBuffer& img) {
  WriteFileBytes(path, EncodeNetpbm(img));
}

std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const std::uint8_t> data) {
  auto tmp = path;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error(ErrorCode::kIo, "short write to " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot rename into " + path.string());
  }
}

}  // namespace castchaos
