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

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "castchaos/image.hpp"
#include "castchaos/modes.hpp"

namespace castchaos {

// Fixed 32-byte big-endian header:
//   "CLSM" | version u8 | mode u8 | flags u8 | channels u8 |
//   width u32 | height u32 | original length per channel u64 |
//   S-box fingerprint u64
// followed by the channel planes, each padded to a multiple of 8 bytes.
// width = height = 0 marks a raw (non-image) payload.
struct CipherHeader {
  static constexpr std::array<std::uint8_t, 4> kMagic = {'C', 'L', 'S', 'M'};
  static constexpr std::uint8_t kVersion = 1;
  static constexpr std::size_t kSize = 32;
  static constexpr std::uint8_t kFlagDynamic = 0x01;

  ChainMode mode = ChainMode::kCbc2;
  bool dynamic = true;
  std::uint8_t channels = 1;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint64_t original_length = 0;
  std::uint64_t fingerprint = 0;

  bool raw() const { return width == 0 && height == 0; }
  std::uint64_t padded_length() const { return (original_length + 7) / 8 * 8; }

  std::array<std::uint8_t, kSize> Serialize() const;
  // Throws Error(kBadHeader) on bad magic, version, mode, flags or channels.
  static CipherHeader Parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const CipherHeader&, const CipherHeader&) = default;
};

struct CipherImage {
  CipherHeader header;
  std::vector<std::uint8_t> payload;

  std::vector<std::uint8_t> Serialize() const;
  // Also checks that the payload length matches the header.
  static CipherImage Parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const CipherImage&, const CipherImage&) = default;
};

// Writes the payload as a PGM/PPM (planes re-interleaved) plus the header
// in `<path>.hdr`, so cipher images can be viewed and histogrammed by other
// tools. Only valid for image payloads.
void ExportCipherImage(const std::filesystem::path& path, const CipherImage& c);
CipherImage ImportCipherImage(const std::filesystem::path& path);

// View of the cipher payload as an image (planes re-interleaved).
ImageBuffer CipherAsImage(const CipherImage& c);

}  // namespace castchaos
