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

#include <cmath>
#include <numbers>
#include <string>

#include "castchaos/error.hpp"

namespace castchaos {

namespace {

constexpr std::uint32_t kDefaultWarmup = 1000;
// Smallest nudge applied when the state lands exactly on 0.
constexpr double kNudge = 0x1p-53;

std::uint64_t LoadBe64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = v << 8 | p[i];
  return v;
}

}  // namespace

void LsmParams::Validate() const {
  if (!std::isfinite(r) || !std::isfinite(mu)) {
    throw Error(ErrorCode::kDomain, "LSM control parameters must be finite");
  }
  if (!(x0 > 0.0 && x0 < 1.0)) {
    throw Error(ErrorCode::kDomain,
                "LSM seed x0 must lie in (0, 1), got " + std::to_string(x0));
  }
}

bool LsmParams::InKeyRange() const {
  return r >= kMinControl && r < kMaxControl && mu >= kMinControl &&
         mu < kMaxControl;
}

double LsmStep(double x, const LsmParams& params) {
  if (!(x > 0.0 && x < 1.0)) {
    throw Error(ErrorCode::kDomain,
                "LSM state must lie in (0, 1), got " + std::to_string(x));
  }
  const double v = params.r * std::sin(std::numbers::pi * x) +
                   params.mu * x * (1.0 - x);
  double y = v - std::floor(v);
  // v just below an integer can round the difference up to exactly 1.
  if (y >= 1.0) y = 0.0;
  return y;
}

ChaoticStream::ChaoticStream(const LsmParams& params)
    : params_(params), state_(params.x0) {
  params_.Validate();
  for (std::uint32_t i = 0; i < params_.warmup; ++i) Advance();
}

double ChaoticStream::Advance() {
  if (state_ == 0.0) {
    state_ = kNudge;
    ++degenerate_events_;
  }
  state_ = LsmStep(state_, params_);
  return state_;
}

double ChaoticStream::Next() {
  ++index_;
  return Advance();
}

std::vector<double> LsmStream(const LsmParams& params, std::size_t n) {
  ChaoticStream stream(params);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(stream.Next());
  return out;
}

LsmParams DeriveParams(const Key128& key, int lane) {
  if (lane < 0 || lane > 3) {
    throw Error(ErrorCode::kDomain,
                "S-box lane must be 0..3, got " + std::to_string(lane));
  }
  const auto lane_mul = static_cast<std::uint64_t>(lane + 1);
  const std::uint64_t t =
      LoadBe64(key.bytes().data()) ^ (lane_mul * 0x9E3779B97F4A7C15ull);
  const std::uint64_t u =
      LoadBe64(key.bytes().data() + 8) ^ (lane_mul * 0xC2B2AE3D27D4EB4Full);

  LsmParams p;
  p.x0 = static_cast<double>((t >> 12) + 1) * 0x1p-53;
  p.r = 4.5 + static_cast<double>(u >> 48) * 0x1p-17;
  p.mu = 4.5 + static_cast<double>((u >> 32) & 0xFFFF) * 0x1p-17;
  p.warmup = kDefaultWarmup;
  return p;
}

}  // namespace castchaos
