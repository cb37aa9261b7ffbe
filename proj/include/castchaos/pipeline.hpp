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
#include <optional>
#include <span>
#include <vector>

#include "castchaos/cast128.hpp"
#include "castchaos/container.hpp"
#include "castchaos/image.hpp"
#include "castchaos/key.hpp"
#include "castchaos/modes.hpp"

namespace castchaos {

// Expanded key plus mode, reusable across many images.
class ImageCipher {
 public:
  // dynamic=true generates the keyed round tables (may throw
  // Error(kDegenerateSequence)); false uses the published tables.
  ImageCipher(const Key128& key, ChainMode mode, bool dynamic = true);

  // Each channel is encrypted as an independent stream. Throws
  // Error(kBadDimensions) if a plane is not a whole number of blocks.
  CipherImage Encrypt(const ImageBuffer& img) const;
  // Arbitrary bytes; the final block is zero padded.
  CipherImage EncryptRaw(std::span<const std::uint8_t> data) const;

  // Throws Error(kSBoxMismatch) if the header's fingerprint or table mode
  // disagrees with this cipher, Error(kBadHeader) on a malformed payload.
  ImageBuffer Decrypt(const CipherImage& c) const;
  std::vector<std::uint8_t> DecryptRaw(const CipherImage& c) const;

  ChainMode mode() const { return mode_; }
  bool dynamic() const { return dynamic_; }
  // Zero for the static tables.
  std::uint64_t fingerprint() const { return fingerprint_; }
  const CipherState& state() const { return state_; }

 private:
  CipherHeader MakeHeader(int channels, std::uint32_t width,
                          std::uint32_t height, std::uint64_t length) const;
  void CheckHeader(const CipherHeader& h) const;

  ChainMode mode_;
  bool dynamic_;
  std::uint64_t fingerprint_ = 0;
  CipherState state_;
};

CipherImage EncryptImage(const ImageBuffer& img, const Key128& key,
                         ChainMode mode = ChainMode::kCbc2,
                         bool dynamic = true);

// Uses the mode and table choice recorded in the header.
ImageBuffer DecryptImage(const CipherImage& c, const Key128& key);
std::vector<std::uint8_t> DecryptRaw(const CipherImage& c, const Key128& key);

}  // namespace castchaos
