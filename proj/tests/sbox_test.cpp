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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "castchaos/error.hpp"
#include "castchaos/report.hpp"
#include "sbox_oracle.hpp"
#include "test_util.hpp"

namespace castchaos {
namespace {

using Table = std::array<std::uint8_t, 256>;

Table IdentityTable() {
  Table t;
  std::iota(t.begin(), t.end(), 0);
  return t;
}

Table RandomPermutation(std::mt19937_64& rng) {
  Table t = IdentityTable();
  std::shuffle(t.begin(), t.end(), rng);
  return t;
}

std::string ReadText(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(SBoxTest, IsBijective) {
  Table t = IdentityTable();
  EXPECT_TRUE(IsBijective(t));
  t[1] = 0;
  EXPECT_FALSE(IsBijective(t));
}

TEST(SBoxTest, FromTableRejectsDuplicates) {
  Table t = IdentityTable();
  t[0] = t[1] = 0;
  try {
    SBox8::FromTable(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotBijective);
  }
}

TEST(SBoxTest, InverseOfIdentityAndReversal) {
  EXPECT_EQ(InvertSBox(SBox8::Identity()), SBox8::Identity());
  Table rev;
  for (int x = 0; x < 256; ++x) rev[x] = static_cast<std::uint8_t>(255 - x);
  const SBox8 r = SBox8::FromTable(rev);
  EXPECT_EQ(InvertSBox(r), r);
}

TEST(SBoxTest, GeneratedBoxesRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const SBox8 s = GenerateSBox(DeriveParams(testing::UsableKey(rng), i % 4));
    ASSERT_TRUE(IsBijective(s.table()));
    for (int x = 0; x < 256; ++x) {
      ASSERT_EQ(s.Inverse(s(static_cast<std::uint8_t>(x))), x);
    }
    ASSERT_EQ(InvertSBox(InvertSBox(s)), s);
  }
}

TEST(SBoxTest, FixedParamsMatchIndependentGenerator) {
  LsmParams p;
  p.r = 4.75;
  p.mu = 4.75;
  p.x0 = 0.5;
  p.warmup = 1000;
  const SBox8 s = GenerateSBox(p);
  // Golden written by tests/oracles/sbox_oracle.py.
  EXPECT_EQ(DumpSBox(s), ReadText(testing::DataDir() / "sbox_fixed_params.txt"));
  EXPECT_EQ(GenerateSBox(p), s);
}

TEST(SBoxTest, KeyedDumpMatchesIndependentGenerator) {
  const auto set =
      DynamicSBoxSet::FromKey(Key128::FromHex("000102030405060708090a0b0c0d0e0f"));
  std::string dump;
  for (int i = 0; i < 4; ++i) {
    dump += "# sigma" + std::to_string(i + 1) + "\n" + DumpSBox(set.sigmas()[i]);
  }
  EXPECT_EQ(dump, ReadText(testing::DataDir() /
                           "sbox_dump_000102030405060708090a0b0c0d0e0f.txt"));
}

TEST(SBoxTest, DegenerateParametersAreReported) {
  // With r = mu = 0 the map is identically zero after one step, so the
  // stream only ever yields byte 0.
  LsmParams p;
  p.r = 0.0;
  p.mu = 0.0;
  p.x0 = 0.5;
  try {
    GenerateSBox(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateSequence);
  }
}

TEST(SBoxDumpTest, ThirtyTwoRowsOfEight) {
  // The first row of the printed sample layout: 8 space-separated values.
  Table t = IdentityTable();
  const Table::value_type row[8] = {217, 102, 155, 61, 239, 182, 26, 199};
  for (int i = 0; i < 8; ++i) std::swap(t[i], t[row[i]]);
  ASSERT_TRUE(IsBijective(t));
  const std::string dump = DumpSBox(SBox8::FromTable(t));
  EXPECT_EQ(dump.substr(0, dump.find('\n')), "217 102 155 61 239 182 26 199");
  EXPECT_EQ(std::count(dump.begin(), dump.end(), '\n'), 32);
  const std::string hex = DumpSBox(SBox8::FromTable(t), true);
  EXPECT_EQ(hex.substr(0, hex.find('\n')), "D9 66 9B 3D EF B6 1A C7");
}

TEST(RoundTablesTest, IdentitySigmaGivesStandardTables) {
  const auto id = SBox8::Identity();
  const auto set = DynamicSBoxSet::Compose({id, id, id, id});
  for (int i = 0; i < 4; ++i) EXPECT_EQ(set.tables()[i], kCastStandardTables[i]);
}

TEST(RoundTablesTest, CompositionOnTheIndex) {
  std::mt19937_64 rng(9);
  const auto set = DynamicSBoxSet::FromKey(testing::UsableKey(rng));
  for (int i = 0; i < 4; ++i) {
    for (int x = 0; x < 256; ++x) {
      ASSERT_EQ(set.tables()[i][x],
                kCastStandardTables[i][set.sigmas()[i](static_cast<std::uint8_t>(x))]);
    }
  }
}

TEST(RoundTablesTest, FingerprintIsFnv1aOverBigEndianWords) {
  const auto id = SBox8::Identity();
  const auto set = DynamicSBoxSet::Compose({id, id, id, id});
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (int i = 0; i < 4; ++i) {
    for (std::uint32_t w : kCastStandardTables[i]) {
      const std::uint8_t be[4] = {static_cast<std::uint8_t>(w >> 24),
                                  static_cast<std::uint8_t>(w >> 16),
                                  static_cast<std::uint8_t>(w >> 8),
                                  static_cast<std::uint8_t>(w)};
      for (auto b : be) {
        h ^= b;
        h *= 0x100000001b3ull;
      }
    }
  }
  EXPECT_EQ(set.fingerprint(), h);
}

TEST(RoundTablesTest, DeterministicAndKeySensitive) {
  std::mt19937_64 rng(21);
  int differing = 0;
  for (int i = 0; i < 1000; ++i) {
    const Key128 key = testing::UsableKey(rng);
    const auto a = BuildRoundTables(key);
    ASSERT_EQ(a.fingerprint(), BuildRoundTables(key).fingerprint());
    unsigned bit;
    do {
      bit = static_cast<unsigned>(rng() % 128);
    } while (!testing::ReachesChaoticParams(bit));
    const Key128 other = key.WithBitFlipped(bit);
    try {
      differing += a.fingerprint() != BuildRoundTables(other).fingerprint();
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::kDegenerateSequence);
      ++differing;
    }
  }
  EXPECT_GE(differing, 999);
}

// Flips outside the derived bit ranges leave every sigma unchanged.
TEST(RoundTablesTest, UnusedKeyBitsDoNotReachTables) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 20; ++i) {
    const Key128 key = testing::UsableKey(rng);
    const auto fp = BuildRoundTables(key).fingerprint();
    for (unsigned bit = 0; bit < 128; ++bit) {
      if (testing::ReachesChaoticParams(bit)) continue;
      EXPECT_EQ(BuildRoundTables(key.WithBitFlipped(bit)).fingerprint(), fp)
          << "bit " << bit;
    }
  }
}

TEST(RoundTablesTest, PeriodicWindowKeyIsRejected) {
  // Lane 3 of this key lands on an attracting 2-cycle (bytes 0x80, 0xCC).
  const Key128 key = Key128::FromHex("010e2b104722515c4e31f6faff2c6d91");
  EXPECT_NO_THROW(GenerateSBox(DeriveParams(key, 0)));
  try {
    DynamicSBoxSet::FromKey(key);
    FAIL() << "expected DegenerateSequence";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateSequence);
  }
}

TEST(QualityTest, IdentityBox) {
  const Table id = IdentityTable();
  EXPECT_EQ(Nonlinearity(id), 0);
  EXPECT_EQ(DifferentialUniformity(id), 256);
  const auto sac = SacMatrix(id);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) EXPECT_EQ(sac[i][j], i == j ? 1.0 : 0.0);
  }
  EXPECT_EQ(AnalyzeSBox(id).fixed_points, 256);
}

TEST(QualityTest, AesConstantsFromBruteForce) {
  const Table aes = testing::AesSBox();
  ASSERT_EQ(aes[0x00], 0x63);
  ASSERT_EQ(aes[0x01], 0x7c);
  ASSERT_EQ(aes[0x53], 0xed);
  const int nl = testing::BruteForceNonlinearity(aes);
  const int du = testing::BruteForceDifferentialUniformity(aes);
  EXPECT_EQ(nl, 112);
  EXPECT_EQ(du, 4);
  EXPECT_EQ(Nonlinearity(aes), nl);
  EXPECT_EQ(DifferentialUniformity(aes), du);
  for (const auto& row : SacMatrix(aes)) {
    for (double v : row) {
      EXPECT_GE(v, 116.0 / 256);
      EXPECT_LE(v, 144.0 / 256);
    }
  }
}

TEST(QualityTest, FastTransformAgreesWithBruteForce) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 3; ++i) {
    const Table t = RandomPermutation(rng);
    EXPECT_EQ(Nonlinearity(t), testing::BruteForceNonlinearity(t));
    EXPECT_EQ(DifferentialUniformity(t), testing::BruteForceDifferentialUniformity(t));
  }
}

TEST(QualityTest, GeneratedBoxesMatchRandomPermutationBaseline) {
  std::mt19937_64 rng(77);
  double gen_nl = 0.0, rand_nl = 0.0, gen_du = 0.0, rand_du = 0.0;
  int gen_min_nl = 128;
  constexpr int kBoxes = 100;
  for (int i = 0; i < kBoxes; ++i) {
    const SBox8 s = GenerateSBox(DeriveParams(testing::UsableKey(rng), 0));
    const Table r = RandomPermutation(rng);
    const int nl = Nonlinearity(s.table());
    gen_min_nl = std::min(gen_min_nl, nl);
    gen_nl += nl;
    rand_nl += Nonlinearity(r);
    gen_du += DifferentialUniformity(s.table());
    rand_du += DifferentialUniformity(r);
  }
  gen_nl /= kBoxes;
  rand_nl /= kBoxes;
  gen_du /= kBoxes;
  rand_du /= kBoxes;
  RecordProperty("generated_mean_nl", std::to_string(gen_nl));
  RecordProperty("random_mean_nl", std::to_string(rand_nl));
  EXPECT_NEAR(gen_nl, rand_nl, 2.0);
  EXPECT_NEAR(gen_du, rand_du, 1.0);
  EXPECT_GE(gen_min_nl, 80);
  EXPECT_GE(gen_du, 8.0);
  EXPECT_LE(gen_du, 14.0);
}

}  // namespace
}  // namespace castchaos
