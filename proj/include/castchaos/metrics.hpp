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
#include <string>
#include <vector>

#include "castchaos/image.hpp"
#include "castchaos/key.hpp"
#include "castchaos/modes.hpp"

namespace castchaos {

using Histogram = std::array<std::uint64_t, 256>;

Histogram ComputeHistogram(std::span<const std::uint8_t> data);

// Shannon entropy in bits per byte. Throws Error(kEmptyInput).
double ShannonEntropy(std::span<const std::uint8_t> data);
double ShannonEntropy(const Histogram& hist);

// Percent of positions that differ. Throws Error(kLengthMismatch).
double Npcr(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
// Mean absolute difference as a percent of 255.
double Uaci(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
// 10 log10(255^2 / MSE); +infinity when the inputs are identical.
double Psnr(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

// Pearson statistic against the uniform distribution, 255 degrees of
// freedom. Throws Error(kEmptyInput) on an all-zero histogram.
double ChiSquareUniformity(const Histogram& hist);

inline constexpr int kChiSquareDof = 255;
// Upper 5% point of chi-square with 255 degrees of freedom.
inline constexpr double kChiSquareCritical05 = 293.25;

struct DifferentialResult {
  double npcr = 0.0;
  double uaci = 0.0;
};

// Encrypts img, adds `delta` (mod 256) to channel 0 of the centre pixel
// (row h/2, column w/2), re-encrypts with the same key and compares the
// two cipher images over the perturbed channel.
DifferentialResult DifferentialTest(const ImageBuffer& img, const Key128& key,
                                    ChainMode mode, bool dynamic = true,
                                    std::uint8_t delta = 1);

struct ChannelMetrics {
  int channel = 0;
  double entropy = 0.0;
  double histogram_chi2 = 0.0;
  Histogram histogram{};
};

struct MetricsReport {
  std::string image;
  ChainMode mode = ChainMode::kCbc2;
  bool dynamic = true;
  std::vector<ChannelMetrics> per_channel;
  double npcr = 0.0;
  double uaci = 0.0;
  double psnr_db = 0.0;
  double encrypt_ms = 0.0;
  double decrypt_ms = 0.0;
  std::uint64_t sbox_fingerprint = 0;
};

// Per-channel entropy, histogram and chi-square of an arbitrary image.
std::vector<ChannelMetrics> ChannelStatistics(const ImageBuffer& img);

struct EvaluateOptions {
  ChainMode mode = ChainMode::kCbc2;
  bool dynamic = true;
  // Timing is the median over this many encrypt/decrypt runs.
  int timing_runs = 11;
};

// The full evaluation: encrypts img, computes per-channel cipher statistics,
// PSNR between plaintext and cipher image, the differential test and
// median timings. Throws Error(kFormat) if decryption fails to round-trip.
MetricsReport EvaluateImage(const ImageBuffer& img, const Key128& key,
                            const EvaluateOptions& opts,
                            const std::string& name = "");

struct BenchResult {
  std::size_t bytes = 0;
  int repetitions = 0;
  double encrypt_ms = 0.0;  // median
  double decrypt_ms = 0.0;  // median
  double encrypt_mb_s = 0.0;
  double decrypt_mb_s = 0.0;
};

BenchResult Benchmark(const ImageBuffer& img, const Key128& key,
                      ChainMode mode, bool dynamic, int repetitions);

double Median(std::vector<double> values);

}  // namespace castchaos
