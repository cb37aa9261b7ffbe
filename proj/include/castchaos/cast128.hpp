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

#include "castchaos/cast_tables.hpp"
#include "castchaos/key.hpp"
#include "castchaos/sbox.hpp"

namespace castchaos {

struct Block64 {
  std::uint32_t left = 0;
  std::uint32_t right = 0;

  static Block64 Load(std::span<const std::uint8_t, 8> in);
  void Store(std::span<std::uint8_t, 8> out) const;
  std::uint64_t ToU64() const {
    return (std::uint64_t{left} << 32) | right;
  }
  static Block64 FromU64(std::uint64_t v) {
    return {static_cast<std::uint32_t>(v >> 32), static_cast<std::uint32_t>(v)};
  }

  friend bool operator==(const Block64&, const Block64&) = default;
};

enum class RoundType { kType1 = 1, kType2 = 2, kType3 = 3 };

// Round function f_type(half) with masking key km and rotation kr, using
// the given S1..S4 substitute tables.
std::uint32_t RoundF(RoundType type, std::uint32_t half, std::uint32_t km,
                     unsigned kr, const std::array<RoundTable, 4>& tables);

// Expanded key: 16 masking and 16 rotation subkeys plus the round tables
// in use. Immutable once built; safe to share between threads.
class CipherState {
 public:
  static constexpr int kRounds = 16;

  // Standard CAST-128 with the published S1..S4.
  explicit CipherState(const Key128& key);
  // Same key schedule, rounds use the keyed tables instead.
  CipherState(const Key128& key, const DynamicSBoxSet& tables);

  Block64 Encrypt(Block64 b) const;
  Block64 Decrypt(Block64 b) const;
  void EncryptBytes(std::span<const std::uint8_t, 8> in,
                    std::span<std::uint8_t, 8> out) const;
  void DecryptBytes(std::span<const std::uint8_t, 8> in,
                    std::span<std::uint8_t, 8> out) const;

  const std::array<std::uint32_t, kRounds>& km() const { return km_; }
  const std::array<std::uint8_t, kRounds>& kr() const { return kr_; }
  const std::array<RoundTable, 4>& tables() const { return tables_; }
  bool dynamic() const { return dynamic_; }

 private:
  std::array<std::uint32_t, kRounds> km_{};
  std::array<std::uint8_t, kRounds> kr_{};
  std::array<RoundTable, 4> tables_{};
  bool dynamic_ = false;
};

struct Subkeys {
  std::array<std::uint32_t, 16> km{};
  std::array<std::uint8_t, 16> kr{};
};

// The standard CAST-128 key schedule; always uses the fixed S5..S8.
Subkeys KeySchedule(const Key128& key);

}  // namespace castchaos
