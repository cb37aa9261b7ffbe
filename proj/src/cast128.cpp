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

#include "castchaos/cast128.hpp"

#include <bit>

namespace castchaos {

namespace {

inline std::uint32_t LoadBe32(const std::uint8_t* p) {
  return std::uint32_t{p[0]} << 24 | std::uint32_t{p[1]} << 16 |
         std::uint32_t{p[2]} << 8 | p[3];
}

inline void StoreBe32(std::uint32_t v, std::uint8_t* p) {
  p[0] = static_cast<std::uint8_t>(v >> 24);
  p[1] = static_cast<std::uint8_t>(v >> 16);
  p[2] = static_cast<std::uint8_t>(v >> 8);
  p[3] = static_cast<std::uint8_t>(v);
}

inline std::uint8_t Byte(std::uint32_t v, int i) {
  return static_cast<std::uint8_t>(v >> (24 - 8 * i));
}

inline std::uint32_t F1(std::uint32_t d, std::uint32_t km, unsigned kr,
                        const std::array<RoundTable, 4>& t) {
  const std::uint32_t i = std::rotl(km + d, static_cast<int>(kr));
  return ((t[0][Byte(i, 0)] ^ t[1][Byte(i, 1)]) - t[2][Byte(i, 2)]) +
         t[3][Byte(i, 3)];
}

inline std::uint32_t F2(std::uint32_t d, std::uint32_t km, unsigned kr,
                        const std::array<RoundTable, 4>& t) {
  const std::uint32_t i = std::rotl(km ^ d, static_cast<int>(kr));
  return ((t[0][Byte(i, 0)] - t[1][Byte(i, 1)]) + t[2][Byte(i, 2)]) ^
         t[3][Byte(i, 3)];
}

inline std::uint32_t F3(std::uint32_t d, std::uint32_t km, unsigned kr,
                        const std::array<RoundTable, 4>& t) {
  const std::uint32_t i = std::rotl(km - d, static_cast<int>(kr));
  return ((t[0][Byte(i, 0)] + t[1][Byte(i, 1)]) ^ t[2][Byte(i, 2)]) -
         t[3][Byte(i, 3)];
}

inline std::uint32_t Round(int round, std::uint32_t d, std::uint32_t km,
                           unsigned kr, const std::array<RoundTable, 4>& t) {
  switch (round % 3) {
    case 0: return F1(d, km, kr, t);
    case 1: return F2(d, km, kr, t);
    default: return F3(d, km, kr, t);
  }
}

// Key schedule working state: the x and z halves of RFC 2144, as bytes.
class ScheduleState {
 public:
  explicit ScheduleState(const Key128& key) {
    for (int i = 0; i < 16; ++i) x_[i] = key[i];
  }

  std::array<std::uint32_t, 32> Expand() {
    std::array<std::uint32_t, 32> k{};
    for (int half = 0; half < 2; ++half) {
      const int base = half * 16;
      ComputeZ();
      k[base + 0] = S5(z_[0x8]) ^ S6(z_[0x9]) ^ S7(z_[0x7]) ^ S8(z_[0x6]) ^ S5(z_[0x2]);
      k[base + 1] = S5(z_[0xA]) ^ S6(z_[0xB]) ^ S7(z_[0x5]) ^ S8(z_[0x4]) ^ S6(z_[0x6]);
      k[base + 2] = S5(z_[0xC]) ^ S6(z_[0xD]) ^ S7(z_[0x3]) ^ S8(z_[0x2]) ^ S7(z_[0x9]);
      k[base + 3] = S5(z_[0xE]) ^ S6(z_[0xF]) ^ S7(z_[0x1]) ^ S8(z_[0x0]) ^ S8(z_[0xC]);
      ComputeX();
      k[base + 4] = S5(x_[0x3]) ^ S6(x_[0x2]) ^ S7(x_[0xC]) ^ S8(x_[0xD]) ^ S5(x_[0x8]);
      k[base + 5] = S5(x_[0x1]) ^ S6(x_[0x0]) ^ S7(x_[0xE]) ^ S8(x_[0xF]) ^ S6(x_[0xD]);
      k[base + 6] = S5(x_[0x7]) ^ S6(x_[0x6]) ^ S7(x_[0x8]) ^ S8(x_[0x9]) ^ S7(x_[0x3]);
      k[base + 7] = S5(x_[0x5]) ^ S6(x_[0x4]) ^ S7(x_[0xA]) ^ S8(x_[0xB]) ^ S8(x_[0x7]);
      ComputeZ();
      k[base + 8] = S5(z_[0x3]) ^ S6(z_[0x2]) ^ S7(z_[0xC]) ^ S8(z_[0xD]) ^ S5(z_[0x9]);
      k[base + 9] = S5(z_[0x1]) ^ S6(z_[0x0]) ^ S7(z_[0xE]) ^ S8(z_[0xF]) ^ S6(z_[0xC]);
      k[base + 10] = S5(z_[0x7]) ^ S6(z_[0x6]) ^ S7(z_[0x8]) ^ S8(z_[0x9]) ^ S7(z_[0x2]);
      k[base + 11] = S5(z_[0x5]) ^ S6(z_[0x4]) ^ S7(z_[0xA]) ^ S8(z_[0xB]) ^ S8(z_[0x6]);
      ComputeX();
      k[base + 12] = S5(x_[0x8]) ^ S6(x_[0x9]) ^ S7(x_[0x7]) ^ S8(x_[0x6]) ^ S5(x_[0x3]);
      k[base + 13] = S5(x_[0xA]) ^ S6(x_[0xB]) ^ S7(x_[0x5]) ^ S8(x_[0x4]) ^ S6(x_[0x7]);
      k[base + 14] = S5(x_[0xC]) ^ S6(x_[0xD]) ^ S7(x_[0x3]) ^ S8(x_[0x2]) ^ S7(x_[0x8]);
      k[base + 15] = S5(x_[0xE]) ^ S6(x_[0xF]) ^ S7(x_[0x1]) ^ S8(x_[0x0]) ^ S8(x_[0xD]);
    }
    return k;
  }

 private:
  static std::uint32_t S5(std::uint8_t i) { return kCastStandardTables[4][i]; }
  static std::uint32_t S6(std::uint8_t i) { return kCastStandardTables[5][i]; }
  static std::uint32_t S7(std::uint8_t i) { return kCastStandardTables[6][i]; }
  static std::uint32_t S8(std::uint8_t i) { return kCastStandardTables[7][i]; }

  static void Put(std::array<std::uint8_t, 16>& dst, int at, std::uint32_t v) {
    StoreBe32(v, dst.data() + at);
  }
  static std::uint32_t Get(const std::array<std::uint8_t, 16>& src, int at) {
    return LoadBe32(src.data() + at);
  }

  void ComputeZ() {
    Put(z_, 0x0, Get(x_, 0x0) ^ S5(x_[0xD]) ^ S6(x_[0xF]) ^ S7(x_[0xC]) ^ S8(x_[0xE]) ^ S7(x_[0x8]));
    Put(z_, 0x4, Get(x_, 0x8) ^ S5(z_[0x0]) ^ S6(z_[0x2]) ^ S7(z_[0x1]) ^ S8(z_[0x3]) ^ S8(x_[0xA]));
    Put(z_, 0x8, Get(x_, 0xC) ^ S5(z_[0x7]) ^ S6(z_[0x6]) ^ S7(z_[0x5]) ^ S8(z_[0x4]) ^ S5(x_[0x9]));
    Put(z_, 0xC, Get(x_, 0x4) ^ S5(z_[0xA]) ^ S6(z_[0x9]) ^ S7(z_[0xB]) ^ S8(z_[0x8]) ^ S6(x_[0xB]));
  }

  void ComputeX() {
    Put(x_, 0x0, Get(z_, 0x8) ^ S5(z_[0x5]) ^ S6(z_[0x7]) ^ S7(z_[0x4]) ^ S8(z_[0x6]) ^ S7(z_[0x0]));
    Put(x_, 0x4, Get(z_, 0x0) ^ S5(x_[0x0]) ^ S6(x_[0x2]) ^ S7(x_[0x1]) ^ S8(x_[0x3]) ^ S8(z_[0x2]));
    Put(x_, 0x8, Get(z_, 0x4) ^ S5(x_[0x7]) ^ S6(x_[0x6]) ^ S7(x_[0x5]) ^ S8(x_[0x4]) ^ S5(z_[0x1]));
    Put(x_, 0xC, Get(z_, 0xC) ^ S5(x_[0xA]) ^ S6(x_[0x9]) ^ S7(x_[0xB]) ^ S8(x_[0x8]) ^ S6(z_[0x3]));
  }

  std::array<std::uint8_t, 16> x_{};
  std::array<std::uint8_t, 16> z_{};
};

std::array<RoundTable, 4> StandardRoundTables() {
  return {kCastStandardTables[0], kCastStandardTables[1],
          kCastStandardTables[2], kCastStandardTables[3]};
}

}  // namespace

Block64 Block64::Load(std::span<const std::uint8_t, 8> in) {
  return {LoadBe32(in.data()), LoadBe32(in.data() + 4)};
}

void Block64::Store(std::span<std::uint8_t, 8> out) const {
  StoreBe32(left, out.data());
  StoreBe32(right, out.data() + 4);
}

std::uint32_t RoundF(RoundType type, std::uint32_t half, std::uint32_t km,
                     unsigned kr, const std::array<RoundTable, 4>& tables) {
  kr &= 31;
  switch (type) {
    case RoundType::kType1: return F1(half, km, kr, tables);
    case RoundType::kType2: return F2(half, km, kr, tables);
    case RoundType::kType3: return F3(half, km, kr, tables);
  }
  return 0;
}

Subkeys KeySchedule(const Key128& key) {
  ScheduleState state(key);
  const auto k = state.Expand();
  Subkeys out;
  for (int i = 0; i < 16; ++i) {
    out.km[i] = k[i];
    out.kr[i] = static_cast<std::uint8_t>(k[16 + i] & 0x1f);
  }
  return out;
}

CipherState::CipherState(const Key128& key)
    : tables_(StandardRoundTables()) {
  const auto sk = KeySchedule(key);
  km_ = sk.km;
  kr_ = sk.kr;
}

CipherState::CipherState(const Key128& key, const DynamicSBoxSet& tables)
    : tables_(tables.tables()), dynamic_(true) {
  const auto sk = KeySchedule(key);
  km_ = sk.km;
  kr_ = sk.kr;
}

Block64 CipherState::Encrypt(Block64 b) const {
  std::uint32_t l = b.left;
  std::uint32_t r = b.right;
  for (int i = 0; i < kRounds; ++i) {
    const std::uint32_t next = l ^ Round(i, r, km_[i], kr_[i], tables_);
    l = r;
    r = next;
  }
  return {r, l};
}

Block64 CipherState::Decrypt(Block64 b) const {
  std::uint32_t l = b.left;
  std::uint32_t r = b.right;
  for (int i = kRounds - 1; i >= 0; --i) {
    const std::uint32_t next = l ^ Round(i, r, km_[i], kr_[i], tables_);
    l = r;
    r = next;
  }
  return {r, l};
}

void CipherState::EncryptBytes(std::span<const std::uint8_t, 8> in,
                               std::span<std::uint8_t, 8> out) const {
  Encrypt(Block64::Load(in)).Store(out);
}

void CipherState::DecryptBytes(std::span<const std::uint8_t, 8> in,
                               std::span<std::uint8_t, 8> out) const {
  Decrypt(Block64::Load(in)).Store(out);
}

}  // namespace castchaos
