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
#include "castchaos/lsm.hpp"

namespace castchaos {

// Bijective byte substitution with its inverse.
class SBox8 {
 public:
  using Table = std::array<std::uint8_t, 256>;

  // Throws Error(kNotBijective) if table is not a permutation of 0..255.
  static SBox8 FromTable(const Table& table);
  static SBox8 Identity();

  std::uint8_t operator()(std::uint8_t x) const { return table_[x]; }
  std::uint8_t Inverse(std::uint8_t y) const { return inverse_[y]; }
  const Table& table() const { return table_; }
  const Table& inverse() const { return inverse_; }

  friend bool operator==(const SBox8& a, const SBox8& b) {
    return a.table_ == b.table_;
  }

 private:
  SBox8() = default;

  Table table_{};
  Table inverse_{};
};

// True iff all 256 entries are distinct.
bool IsBijective(std::span<const std::uint8_t, 256> table);

// Returns the inverse permutation as an SBox8.
SBox8 InvertSBox(const SBox8& s);

// Maximum number of post-warmup draws GenerateSBox will consume.
inline constexpr std::uint64_t kMaxSBoxIterations = 1'000'000;

// Maps each stream value x to min(floor(256 x), 255) and keeps the first
// occurrence of each byte until all 256 have been seen. Throws
// Error(kDegenerateSequence) if the iteration cap is reached first.
SBox8 GenerateSBox(const LsmParams& params);

// The four keyed round tables S'i = Si o sigma_i that replace S1..S4 in the
// cipher rounds, plus an FNV-1a-64 fingerprint of their contents.
class DynamicSBoxSet {
 public:
  // sigma_i = GenerateSBox(DeriveParams(key, i)).
  static DynamicSBoxSet FromKey(const Key128& key);
  // Composes explicit permutations with the standard tables.
  static DynamicSBoxSet Compose(const std::array<SBox8, 4>& sigmas);

  const std::array<RoundTable, 4>& tables() const { return tables_; }
  const std::array<SBox8, 4>& sigmas() const { return sigmas_; }
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  DynamicSBoxSet(const std::array<SBox8, 4>& sigmas);

  std::array<SBox8, 4> sigmas_;
  std::array<RoundTable, 4> tables_{};
  std::uint64_t fingerprint_ = 0;
};

inline DynamicSBoxSet BuildRoundTables(const Key128& key) {
  return DynamicSBoxSet::FromKey(key);
}

// FNV-1a-64 over the tables serialized as big-endian words, S'1 first.
std::uint64_t FingerprintTables(const std::array<RoundTable, 4>& tables);

struct SBoxQuality {
  // min over nonzero output masks v of 128 - max_u |W_v(u)| / 2
  int nonlinearity = 0;
  // Mean of the same quantity over the eight single-bit output masks,
  // the figure most S-box literature quotes as "nonlinearity".
  double coordinate_nonlinearity = 0.0;
  // sac[i][j]: probability output bit j flips when input bit i flips.
  std::array<std::array<double, 8>, 8> sac{};
  double sac_mean_deviation = 0.0;
  int differential_uniformity = 0;
  int fixed_points = 0;
  bool bijective = false;
};

int Nonlinearity(std::span<const std::uint8_t, 256> s);
double CoordinateNonlinearity(std::span<const std::uint8_t, 256> s);
std::array<std::array<double, 8>, 8> SacMatrix(
    std::span<const std::uint8_t, 256> s);
int DifferentialUniformity(std::span<const std::uint8_t, 256> s);
SBoxQuality AnalyzeSBox(std::span<const std::uint8_t, 256> s);

}  // namespace castchaos
