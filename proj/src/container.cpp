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

#include "castchaos/container.hpp"

#include <algorithm>
#include <string>

#include "castchaos/error.hpp"
#include "castchaos/netpbm.hpp"

namespace castchaos {

namespace {

void PutBe(std::uint8_t* p, std::uint64_t v, int bytes) {
  for (int i = bytes - 1; i >= 0; --i) {
    p[i] = static_cast<std::uint8_t>(v);
    v >>= 8;
  }
}

std::uint64_t GetBe(const std::uint8_t* p, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v = v << 8 | p[i];
  return v;
}

std::filesystem::path SidecarPath(const std::filesystem::path& path) {
  auto p = path;
  p += ".hdr";
  return p;
}

}  // namespace

std::array<std::uint8_t, CipherHeader::kSize> CipherHeader::Serialize() const {
  std::array<std::uint8_t, kSize> out{};
  std::copy(kMagic.begin(), kMagic.end(), out.begin());
  out[4] = kVersion;
  out[5] = static_cast<std::uint8_t>(mode);
  out[6] = dynamic ? kFlagDynamic : 0;
  out[7] = channels;
  PutBe(&out[8], width, 4);
  PutBe(&out[12], height, 4);
  PutBe(&out[16], original_length, 8);
  PutBe(&out[24], fingerprint, 8);
  return out;
}

CipherHeader CipherHeader::Parse(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kSize) {
    throw Error(ErrorCode::kBadHeader, "container shorter than its header");
  }
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error(ErrorCode::kBadHeader, "bad container magic");
  }
  if (bytes[4] != kVersion) {
    throw Error(ErrorCode::kBadHeader,
                "unsupported container version " + std::to_string(bytes[4]));
  }
  if (bytes[5] > static_cast<std::uint8_t>(ChainMode::kCbc2)) {
    throw Error(ErrorCode::kBadHeader,
                "unknown chaining mode " + std::to_string(bytes[5]));
  }
  if ((bytes[6] & ~kFlagDynamic) != 0) {
    throw Error(ErrorCode::kBadHeader, "unknown header flags");
  }
  CipherHeader h;
  h.mode = static_cast<ChainMode>(bytes[5]);
  h.dynamic = (bytes[6] & kFlagDynamic) != 0;
  h.channels = bytes[7];
  h.width = static_cast<std::uint32_t>(GetBe(&bytes[8], 4));
  h.height = static_cast<std::uint32_t>(GetBe(&bytes[12], 4));
  h.original_length = GetBe(&bytes[16], 8);
  h.fingerprint = GetBe(&bytes[24], 8);
  if (h.channels != 1 && h.channels != 3) {
    throw Error(ErrorCode::kBadHeader,
                "bad channel count " + std::to_string(h.channels));
  }
  if (h.raw() ? h.channels != 1
              : h.original_length !=
                    std::uint64_t{h.width} * std::uint64_t{h.height}) {
    throw Error(ErrorCode::kBadHeader, "header dimensions are inconsistent");
  }
  if (!h.dynamic && h.fingerprint != 0) {
    throw Error(ErrorCode::kBadHeader,
                "static-table container carries a fingerprint");
  }
  return h;
}

std::vector<std::uint8_t> CipherImage::Serialize() const {
  const auto head = header.Serialize();
  std::vector<std::uint8_t> out(head.begin(), head.end());
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

CipherImage CipherImage::Parse(std::span<const std::uint8_t> bytes) {
  CipherImage c;
  c.header = CipherHeader::Parse(bytes);
  const std::uint64_t expected = c.header.padded_length() * c.header.channels;
  if (bytes.size() - CipherHeader::kSize != expected) {
    throw Error(ErrorCode::kBadHeader,
                "payload holds " +
                    std::to_string(bytes.size() - CipherHeader::kSize) +
                    " bytes, header implies " + std::to_string(expected));
  }
  c.payload.assign(bytes.begin() + CipherHeader::kSize, bytes.end());
  return c;
}

ImageBuffer CipherAsImage(const CipherImage& c) {
  const auto& h = c.header;
  if (h.raw()) {
    throw Error(ErrorCode::kFormat, "raw payloads have no image shape");
  }
  if (c.payload.size() != h.padded_length() * h.channels) {
    throw Error(ErrorCode::kBadHeader, "payload size does not match header");
  }
  ImageBuffer img(h.width, h.height, h.channels);
  const std::size_t plane = img.plane_size();
  for (int ch = 0; ch < h.channels; ++ch) {
    img.SetPlane(ch, std::span(c.payload).subspan(ch * h.padded_length(), plane));
  }
  return img;
}

void ExportCipherImage(const std::filesystem::path& path,
                       const CipherImage& c) {
  if (c.header.padded_length() != c.header.original_length) {
    throw Error(ErrorCode::kFormat,
                "only block-aligned image payloads can be exported");
  }
  const ImageBuffer img = CipherAsImage(c);
  const auto head = c.header.Serialize();
  WriteFileBytes(SidecarPath(path), head);
  WriteNetpbm(path, img);
}

CipherImage ImportCipherImage(const std::filesystem::path& path) {
  const auto head = ReadFileBytes(SidecarPath(path));
  CipherImage c;
  c.header = CipherHeader::Parse(head);
  const ImageBuffer img = ReadNetpbm(path);
  if (img.width() != c.header.width || img.height() != c.header.height ||
      img.channels() != c.header.channels) {
    throw Error(ErrorCode::kBadHeader, "sidecar header does not match image");
  }
  for (int ch = 0; ch < img.channels(); ++ch) {
    const auto plane = img.Plane(ch);
    c.payload.insert(c.payload.end(), plane.begin(), plane.end());
  }
  return c;
}

}  // namespace castchaos
