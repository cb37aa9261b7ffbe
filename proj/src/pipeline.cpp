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

#include "castchaos/pipeline.hpp"

#include <string>

#include "castchaos/error.hpp"
#include "castchaos/sbox.hpp"

namespace castchaos {

namespace {

struct StateAndFingerprint {
  CipherState state;
  std::uint64_t fingerprint;
};

StateAndFingerprint MakeState(const Key128& key, bool dynamic) {
  if (!dynamic) return {CipherState(key), 0};
  const DynamicSBoxSet tables = DynamicSBoxSet::FromKey(key);
  return {CipherState(key, tables), tables.fingerprint()};
}

}  // namespace

ImageCipher::ImageCipher(const Key128& key, ChainMode mode, bool dynamic)
    : mode_(mode), dynamic_(dynamic), state_([&] {
        auto made = MakeState(key, dynamic);
        fingerprint_ = made.fingerprint;
        return made.state;
      }()) {}

CipherHeader ImageCipher::MakeHeader(int channels, std::uint32_t width,
                                     std::uint32_t height,
                                     std::uint64_t length) const {
  CipherHeader h;
  h.mode = mode_;
  h.dynamic = dynamic_;
  h.channels = static_cast<std::uint8_t>(channels);
  h.width = width;
  h.height = height;
  h.original_length = length;
  h.fingerprint = fingerprint_;
  return h;
}

void ImageCipher::CheckHeader(const CipherHeader& h) const {
  if (h.dynamic != dynamic_ || h.fingerprint != fingerprint_) {
    throw Error(ErrorCode::kSBoxMismatch,
                "S-box fingerprint in the container does not match the tables "
                "derived from this key");
  }
}

CipherImage ImageCipher::Encrypt(const ImageBuffer& img) const {
  if (img.plane_size() % 8 != 0 || img.plane_size() == 0) {
    throw Error(ErrorCode::kBadDimensions,
                "image plane of " + std::to_string(img.plane_size()) +
                    " bytes is not a whole number of blocks");
  }
  CipherImage c;
  c.header = MakeHeader(img.channels(), img.width(), img.height(),
                        img.plane_size());
  c.payload.reserve(img.pixels().size());
  for (int ch = 0; ch < img.channels(); ++ch) {
    auto plane = img.Plane(ch);
    EncryptBlocks(state_, mode_, plane);
    c.payload.insert(c.payload.end(), plane.begin(), plane.end());
  }
  return c;
}

CipherImage ImageCipher::EncryptRaw(std::span<const std::uint8_t> data) const {
  CipherImage c;
  c.header = MakeHeader(1, 0, 0, data.size());
  c.payload.assign(data.begin(), data.end());
  c.payload.resize(c.header.padded_length(), 0);
  EncryptBlocks(state_, mode_, c.payload);
  return c;
}

ImageBuffer ImageCipher::Decrypt(const CipherImage& c) const {
  const auto& h = c.header;
  if (h.raw()) {
    throw Error(ErrorCode::kFormat, "container holds raw data, not an image");
  }
  CheckHeader(h);
  if (c.payload.size() != h.padded_length() * h.channels) {
    throw Error(ErrorCode::kBadHeader, "payload size does not match header");
  }
  ImageBuffer img(h.width, h.height, h.channels);
  for (int ch = 0; ch < h.channels; ++ch) {
    std::vector<std::uint8_t> plane(
        c.payload.begin() + ch * h.padded_length(),
        c.payload.begin() + (ch + 1) * h.padded_length());
    DecryptBlocks(state_, h.mode, plane);
    plane.resize(h.original_length);
    img.SetPlane(ch, plane);
  }
  return img;
}

std::vector<std::uint8_t> ImageCipher::DecryptRaw(const CipherImage& c) const {
  const auto& h = c.header;
  if (!h.raw()) {
    throw Error(ErrorCode::kFormat, "container holds an image, not raw data");
  }
  CheckHeader(h);
  if (c.payload.size() != h.padded_length()) {
    throw Error(ErrorCode::kBadHeader, "payload size does not match header");
  }
  std::vector<std::uint8_t> data = c.payload;
  DecryptBlocks(state_, h.mode, data);
  data.resize(h.original_length);
  return data;
}

CipherImage EncryptImage(const ImageBuffer& img, const Key128& key,
                         ChainMode mode, bool dynamic) {
  return ImageCipher(key, mode, dynamic).Encrypt(img);
}

ImageBuffer DecryptImage(const CipherImage& c, const Key128& key) {
  return ImageCipher(key, c.header.mode, c.header.dynamic).Decrypt(c);
}

std::vector<std::uint8_t> DecryptRaw(const CipherImage& c, const Key128& key) {
  return ImageCipher(key, c.header.mode, c.header.dynamic).DecryptRaw(c);
}

}  // namespace castchaos
