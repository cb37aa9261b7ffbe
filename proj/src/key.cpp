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

#include "castchaos/key.hpp"

#include <algorithm>

#include "castchaos/error.hpp"

namespace castchaos {

namespace {

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Key128 Key128::FromBytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kSize) {
    throw Error(ErrorCode::kKeyLength,
                "key must be 16 bytes, got " + std::to_string(bytes.size()));
  }
  std::array<std::uint8_t, kSize> k;
  std::copy(bytes.begin(), bytes.end(), k.begin());
  return Key128(k);
}

Key128 Key128::FromHex(std::string_view hex) {
  if (hex.size() != 2 * kSize) {
    throw Error(ErrorCode::kKeyLength,
                "key must be 32 hex digits, got " + std::to_string(hex.size()));
  }
  std::array<std::uint8_t, kSize> k;
  for (std::size_t i = 0; i < kSize; ++i) {
    int hi = HexValue(hex[2 * i]);
    int lo = HexValue(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorCode::kKeyLength, "key contains a non-hex character");
    }
    k[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return Key128(k);
}

std::string Key128::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * kSize);
  for (auto b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Key128 Key128::WithBitFlipped(unsigned bit) const {
  auto k = bytes_;
  k[(bit / 8) % kSize] ^= static_cast<std::uint8_t>(0x80u >> (bit % 8));
  return Key128(k);
}

}  // namespace castchaos
