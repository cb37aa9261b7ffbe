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
#include <span>
#include <string>
#include <string_view>

namespace castchaos {

// A 128-bit user key. Bytes are stored in the order they are written
// (k[0] is the most significant byte of the hex form).
class Key128 {
 public:
  static constexpr std::size_t kSize = 16;

  Key128() = default;
  explicit constexpr Key128(const std::array<std::uint8_t, kSize>& bytes)
      : bytes_(bytes) {}

  // Throws Error(kKeyLength) unless exactly 16 bytes are given.
  static Key128 FromBytes(std::span<const std::uint8_t> bytes);
  // Accepts exactly 32 hex digits; whitespace is not allowed.
  static Key128 FromHex(std::string_view hex);

  std::string ToHex() const;
  const std::array<std::uint8_t, kSize>& bytes() const { return bytes_; }
  std::uint8_t operator[](std::size_t i) const { return bytes_[i]; }

  // Returns a copy with bit `bit` (0 = MSB of byte 0) inverted.
  Key128 WithBitFlipped(unsigned bit) const;

  friend bool operator==(const Key128&, const Key128&) = default;

 private:
  std::array<std::uint8_t, kSize> bytes_{};
};

}  // namespace castchaos
