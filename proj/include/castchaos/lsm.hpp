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

#include <cstdint>
#include <vector>

#include "castchaos/key.hpp"

namespace castchaos {

// Control parameters and seed of the Logistic-Sine Map
//   x' = (r * sin(pi * x) + mu * x * (1 - x)) mod 1.
struct LsmParams {
  double r = 0.0;
  double mu = 0.0;
  double x0 = 0.5;
  std::uint32_t warmup = 0;

  // Range produced by DeriveParams for both r and mu.
  static constexpr double kMinControl = 4.5;
  static constexpr double kMaxControl = 5.0;

  // Throws Error(kDomain) if r or mu is not finite or x0 is not in (0, 1).
  void Validate() const;
  // True when r and mu both lie in [kMinControl, kMaxControl).
  bool InKeyRange() const;

  friend bool operator==(const LsmParams&, const LsmParams&) = default;
};

// One map iteration in binary64. Throws Error(kDomain) unless 0 < x < 1.
double LsmStep(double x, const LsmParams& params);

// Stateful iterator over the map. Independent instances never share state;
// a single instance must not be stepped from two threads at once.
class ChaoticStream {
 public:
  // Validates params and runs the warmup iterations.
  explicit ChaoticStream(const LsmParams& params);

  double Next();

  const LsmParams& params() const { return params_; }
  double state() const { return state_; }
  // Post-warmup values emitted so far.
  std::uint64_t index() const { return index_; }
  // Number of times the state collapsed to 0 and was nudged by 2^-53.
  std::uint64_t degenerate_events() const { return degenerate_events_; }

 private:
  double Advance();

  LsmParams params_;
  double state_;
  std::uint64_t index_ = 0;
  std::uint64_t degenerate_events_ = 0;
};

// First n post-warmup values of the stream seeded by params.
std::vector<double> LsmStream(const LsmParams& params, std::size_t n);

// Key-to-parameter mapping for one of the four S-box lanes (0..3).
// x0 lands in (0, 0.5]; r and mu in [4.5, 5.0); warmup is 1000.
LsmParams DeriveParams(const Key128& key, int lane);

}  // namespace castchaos
