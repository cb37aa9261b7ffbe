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

#include "castchaos/lsm.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "castchaos/error.hpp"
#include "test_util.hpp"

namespace castchaos {
namespace {

LsmParams Params(double r, double mu, double x0, std::uint32_t warmup) {
  LsmParams p;
  p.r = r;
  p.mu = mu;
  p.x0 = x0;
  p.warmup = warmup;
  return p;
}

TEST(LsmStepTest, HalfWithControlFive) {
  // sin(pi/2) rounds to exactly 1: 5 + 1.25 = 6.25 -> 0.25.
  EXPECT_EQ(LsmStep(0.5, Params(5, 5, 0.5, 0)), 0.25);
}

TEST(LsmStepTest, PureLogisticRegimeCollapsesToZero) {
  EXPECT_EQ(LsmStep(0.5, Params(0, 4, 0.5, 0)), 0.0);
}

TEST(LsmStepTest, QuarterMatchesHighPrecisionOracle) {
  // tests/oracles/lsm_oracle.py, 60 significant digits.
  EXPECT_NEAR(LsmStep(0.25, Params(5, 5, 0.5, 0)),
              0.473033905932737622004221810524, 1e-12);
}

TEST(LsmStepTest, RejectsStateOutsideOpenInterval) {
  const auto p = Params(5, 5, 0.5, 0);
  for (double x : {0.0, 1.0, -0.1, 1.5, std::nan("")}) {
    try {
      LsmStep(x, p);
      FAIL() << "accepted x=" << x;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDomain);
    }
  }
}

TEST(LsmStepTest, OutputAlwaysInUnitInterval) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> control(4.5, 5.0);
  std::uniform_real_distribution<double> state(0.0, 1.0);
  for (int i = 0; i < 100000; ++i) {
    double x = state(rng);
    if (x == 0.0) continue;
    const double y = LsmStep(x, Params(control(rng), control(rng), 0.5, 0));
    ASSERT_GE(y, 0.0);
    ASSERT_LT(y, 1.0);
  }
}

TEST(LsmStreamTest, EmptyRequest) {
  EXPECT_TRUE(LsmStream(Params(5, 5, 0.5, 0), 0).empty());
}

TEST(LsmStreamTest, FirstTwoValuesChainTheStep) {
  const auto s = LsmStream(Params(5, 5, 0.5, 0), 2);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], 0.25);
  EXPECT_NEAR(s[1], 0.473033905932737622004221810524, 1e-12);
}

TEST(LsmStreamTest, WarmupIsDiscarded) {
  const auto p = Params(4.7, 4.8, 0.3, 0);
  auto q = p;
  q.warmup = 5;
  const auto full = LsmStream(p, 10);
  const auto tail = LsmStream(q, 5);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(tail[i], full[5 + i]);
}

TEST(LsmStreamTest, Deterministic) {
  const auto p = Params(4.61, 4.93, 0.123, 1000);
  EXPECT_EQ(LsmStream(p, 100000), LsmStream(p, 100000));
}

TEST(LsmStreamTest, IndependentStreamObjects) {
  const auto p = Params(4.61, 4.93, 0.123, 10);
  ChaoticStream a(p);
  ChaoticStream b(p);
  a.Next();
  a.Next();
  EXPECT_EQ(b.Next(), LsmStream(p, 1)[0]);
  EXPECT_EQ(a.index(), 2u);
  EXPECT_EQ(b.index(), 1u);
}

TEST(LsmStreamTest, ZeroStateIsNudgedNotFatal) {
  // r = 0, mu = 4 maps 0.5 to exactly 0; the next step must recover.
  ChaoticStream s(Params(0, 4, 0.5, 0));
  EXPECT_EQ(s.Next(), 0.0);
  const double next = s.Next();
  EXPECT_GT(next, 0.0);
  EXPECT_LT(next, 1.0);
  EXPECT_EQ(s.degenerate_events(), 1u);
}

TEST(LsmStreamTest, RejectsBadSeed) {
  EXPECT_THROW(ChaoticStream(Params(5, 5, 0.0, 0)), Error);
  EXPECT_THROW(ChaoticStream(Params(5, 5, 1.0, 0)), Error);
  EXPECT_THROW(ChaoticStream(Params(INFINITY, 5, 0.5, 0)), Error);
}

TEST(DeriveParamsTest, ZeroKeyLaneZero) {
  // t = 0x9E3779B97F4A7C15, u = 0xC2B2AE3D27D4EB4F (lsm_oracle.py).
  const auto p = DeriveParams(Key128{}, 0);
  EXPECT_EQ(p.x0, 0x1.3c6ef372fe950p-2);
  EXPECT_EQ(p.x0, static_cast<double>((0x9E3779B97F4A7C15ull >> 12) + 1) /
                      9007199254740992.0);
  EXPECT_EQ(p.r, 0x1.3856400000000p+2);
  EXPECT_EQ(p.mu, 0x1.35c7a00000000p+2);
  EXPECT_EQ(p.warmup, 1000u);
}

TEST(DeriveParamsTest, ZeroKeyOtherLanes) {
  const Key128 zero;
  EXPECT_EQ(DeriveParams(zero, 1).x0, 0x1.e3779b97f4a80p-4);
  EXPECT_EQ(DeriveParams(zero, 2).r, 0x1.2903000000000p+2);
  EXPECT_EQ(DeriveParams(zero, 3).mu, 0x1.371e800000000p+2);
}

TEST(DeriveParamsTest, LanesDiffer) {
  const Key128 zero;
  EXPECT_NE(DeriveParams(zero, 0), DeriveParams(zero, 1));
  EXPECT_THROW(DeriveParams(zero, 4), Error);
}

TEST(DeriveParamsTest, RangesHoldForRandomKeys) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const Key128 key = testing::RandomKey(rng);
    for (int lane = 0; lane < 4; ++lane) {
      const auto p = DeriveParams(key, lane);
      ASSERT_TRUE(p.InKeyRange());
      ASSERT_GT(p.x0, 0.0);
      ASSERT_LE(p.x0, 0.5);
    }
  }
}

TEST(DeriveParamsTest, SeedBitFlipChangesX0) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Key128 key = testing::RandomKey(rng);
    const unsigned bit = static_cast<unsigned>(rng() % 52);  // bits 12..63 of t
    const Key128 other = key.WithBitFlipped(bit);
    EXPECT_NE(DeriveParams(key, 0).x0, DeriveParams(other, 0).x0);
  }
}

TEST(LsmSensitivityTest, OneBitKeyChangeDiverges) {
  std::mt19937_64 rng(17);
  int diverged = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Key128 key = testing::RandomKey(rng);
    unsigned bit;
    do {
      bit = static_cast<unsigned>(rng() % 128);
    } while (!testing::ReachesChaoticParams(bit));
    const Key128 other = key.WithBitFlipped(bit);
    const auto a = LsmStream(DeriveParams(key, 0), 50);
    const auto b = LsmStream(DeriveParams(other, 0), 50);
    for (int i = 0; i < 50; ++i) {
      if (std::abs(a[i] - b[i]) > 0.1) {
        ++diverged;
        break;
      }
    }
  }
  EXPECT_GE(diverged, 95);
}

}  // namespace
}  // namespace castchaos
