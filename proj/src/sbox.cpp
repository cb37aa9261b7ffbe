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

#include "castchaos/sbox.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "castchaos/error.hpp"

namespace castchaos {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

// Walsh-Hadamard transform of a +/-1 valued truth table, in place.
void FastWalsh(std::array<int, 256>& a) {
  for (int h = 1; h < 256; h <<= 1) {
    for (int i = 0; i < 256; i += h << 1) {
      for (int j = i; j < i + h; ++j) {
        const int x = a[j];
        const int y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
    }
  }
}

// 128 - max_u |W(u)| / 2 for the component v . S(x).
int ComponentNonlinearity(std::span<const std::uint8_t, 256> s, unsigned v) {
  std::array<int, 256> w;
  for (int x = 0; x < 256; ++x) {
    w[x] = (std::popcount(static_cast<unsigned>(s[x] & v)) & 1) ? -1 : 1;
  }
  FastWalsh(w);
  int peak = 0;
  for (int value : w) peak = std::max(peak, std::abs(value));
  return 128 - peak / 2;
}

}  // namespace

bool IsBijective(std::span<const std::uint8_t, 256> table) {
  std::array<bool, 256> seen{};
  for (auto b : table) {
    if (seen[b]) return false;
    seen[b] = true;
  }
  return true;
}

SBox8 SBox8::FromTable(const Table& table) {
  if (!IsBijective(table)) {
    throw Error(ErrorCode::kNotBijective, "S-box table is not a permutation");
  }
  SBox8 s;
  s.table_ = table;
  for (int x = 0; x < 256; ++x) {
    s.inverse_[table[x]] = static_cast<std::uint8_t>(x);
  }
  return s;
}

SBox8 SBox8::Identity() {
  Table t;
  std::iota(t.begin(), t.end(), 0);
  return FromTable(t);
}

SBox8 InvertSBox(const SBox8& s) { return SBox8::FromTable(s.inverse()); }

SBox8 GenerateSBox(const LsmParams& params) {
  ChaoticStream stream(params);
  SBox8::Table table{};
  std::array<bool, 256> seen{};
  int filled = 0;
  for (std::uint64_t i = 0; i < kMaxSBoxIterations && filled < 256; ++i) {
    const double x = stream.Next();
    const auto b = static_cast<std::uint8_t>(
        std::min(std::floor(x * 256.0), 255.0));
    if (!seen[b]) {
      seen[b] = true;
      table[filled++] = b;
    }
  }
  if (filled < 256) {
    throw Error(ErrorCode::kDegenerateSequence,
                "chaotic stream produced only " + std::to_string(filled) +
                    " distinct bytes in " +
                    std::to_string(kMaxSBoxIterations) + " iterations");
  }
  return SBox8::FromTable(table);
}

std::uint64_t FingerprintTables(const std::array<RoundTable, 4>& tables) {
  std::uint64_t h = kFnvOffset;
  for (const auto& t : tables) {
    for (std::uint32_t word : t) {
      for (int shift = 24; shift >= 0; shift -= 8) {
        h ^= (word >> shift) & 0xff;
        h *= kFnvPrime;
      }
    }
  }
  return h;
}

DynamicSBoxSet::DynamicSBoxSet(const std::array<SBox8, 4>& sigmas)
    : sigmas_(sigmas) {
  for (int i = 0; i < 4; ++i) {
    for (int x = 0; x < 256; ++x) {
      tables_[i][x] = kCastStandardTables[i][sigmas_[i](x)];
    }
  }
  fingerprint_ = FingerprintTables(tables_);
}

DynamicSBoxSet DynamicSBoxSet::Compose(const std::array<SBox8, 4>& sigmas) {
  return DynamicSBoxSet(sigmas);
}

DynamicSBoxSet DynamicSBoxSet::FromKey(const Key128& key) {
  return DynamicSBoxSet({GenerateSBox(DeriveParams(key, 0)),
                         GenerateSBox(DeriveParams(key, 1)),
                         GenerateSBox(DeriveParams(key, 2)),
                         GenerateSBox(DeriveParams(key, 3))});
}

int Nonlinearity(std::span<const std::uint8_t, 256> s) {
  int nl = 128;
  for (unsigned v = 1; v < 256; ++v) {
    nl = std::min(nl, ComponentNonlinearity(s, v));
  }
  return nl;
}

double CoordinateNonlinearity(std::span<const std::uint8_t, 256> s) {
  int total = 0;
  for (unsigned bit = 0; bit < 8; ++bit) {
    total += ComponentNonlinearity(s, 1u << bit);
  }
  return total / 8.0;
}

std::array<std::array<double, 8>, 8> SacMatrix(
    std::span<const std::uint8_t, 256> s) {
  std::array<std::array<int, 8>, 8> counts{};
  for (int i = 0; i < 8; ++i) {
    for (int x = 0; x < 256; ++x) {
      const unsigned diff = s[x] ^ s[x ^ (1 << i)];
      for (int j = 0; j < 8; ++j) counts[i][j] += (diff >> j) & 1;
    }
  }
  std::array<std::array<double, 8>, 8> sac{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) sac[i][j] = counts[i][j] / 256.0;
  }
  return sac;
}

int DifferentialUniformity(std::span<const std::uint8_t, 256> s) {
  int best = 0;
  std::array<int, 256> row;
  for (int a = 1; a < 256; ++a) {
    row.fill(0);
    for (int x = 0; x < 256; ++x) ++row[s[x ^ a] ^ s[x]];
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return best;
}

SBoxQuality AnalyzeSBox(std::span<const std::uint8_t, 256> s) {
  SBoxQuality q;
  q.nonlinearity = Nonlinearity(s);
  q.coordinate_nonlinearity = CoordinateNonlinearity(s);
  q.sac = SacMatrix(s);
  double dev = 0.0;
  for (const auto& row : q.sac) {
    for (double v : row) dev += std::abs(v - 0.5);
  }
  q.sac_mean_deviation = dev / 64.0;
  q.differential_uniformity = DifferentialUniformity(s);
  for (int x = 0; x < 256; ++x) q.fixed_points += (s[x] == x);
  q.bijective = IsBijective(s);
  return q;
}

}  // namespace castchaos
