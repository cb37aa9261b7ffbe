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
#include <optional>
#include <random>
#include <vector>

#include "castchaos/error.hpp"
#include "castchaos/image.hpp"
#include "castchaos/key.hpp"
#include "castchaos/sbox.hpp"

namespace castchaos::testing {

inline std::filesystem::path DataDir() { return CASTCHAOS_TEST_DATA_DIR; }

inline Key128 RandomKey(std::mt19937_64& rng) {
  std::array<std::uint8_t, 16> k;
  for (auto& b : k) b = static_cast<std::uint8_t>(rng());
  return Key128(k);
}

// Draws keys until one generates all four sigmas; callers are required to
// reject keys whose chaotic parameters sit in a periodic window.
inline Key128 UsableKey(std::mt19937_64& rng, int* rejected = nullptr,
                        std::optional<DynamicSBoxSet>* set = nullptr) {
  for (;;) {
    const Key128 k = RandomKey(rng);
    try {
      auto built = DynamicSBoxSet::FromKey(k);
      if (set) set->emplace(std::move(built));
      return k;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegenerateSequence) throw;
      if (rejected) ++*rejected;
    }
  }
}

// Key bits (0 = MSB of byte 0) that reach the chaotic parameters: the top 52
// bits of the first word feed x0, the top 32 of the second feed r and mu.
inline bool ReachesChaoticParams(unsigned bit) {
  return bit < 52 || (bit >= 64 && bit < 96);
}

inline std::vector<std::uint8_t> RandomBytes(std::mt19937_64& rng,
                                             std::size_t n) {
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = static_cast<std::uint8_t>(rng());
  return v;
}

inline ImageBuffer RandomImage(std::mt19937_64& rng, std::uint32_t w,
                               std::uint32_t h, int channels) {
  return ImageBuffer(w, h, channels,
                     RandomBytes(rng, std::size_t{w} * h * channels));
}

// The AES S-box built from its definition (inverse in GF(2^8) followed by
// the affine map), so no table is trusted.
inline std::array<std::uint8_t, 256> AesSBox() {
  auto mul = [](std::uint8_t a, std::uint8_t b) {
    std::uint8_t p = 0;
    while (b) {
      if (b & 1) p ^= a;
      a = static_cast<std::uint8_t>((a << 1) ^ ((a & 0x80) ? 0x1b : 0));
      b >>= 1;
    }
    return p;
  };
  std::array<std::uint8_t, 256> s{};
  for (int x = 0; x < 256; ++x) {
    std::uint8_t inv = 0;
    for (int y = 1; y < 256 && x; ++y) {
      if (mul(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)) == 1) {
        inv = static_cast<std::uint8_t>(y);
        break;
      }
    }
    std::uint8_t v = inv;
    std::uint8_t out = 0x63;
    for (int i = 0; i < 5; ++i) {
      out ^= v;
      v = static_cast<std::uint8_t>((v << 1) | (v >> 7));
    }
    s[x] = out;
  }
  return s;
}

}  // namespace castchaos::testing
