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

#include "castchaos/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "castchaos/error.hpp"
#include "castchaos/pipeline.hpp"

namespace castchaos {

namespace {

void CheckPair(std::span<const std::uint8_t> a,
               std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "inputs differ in length: " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()));
  }
  if (a.empty()) throw Error(ErrorCode::kEmptyInput, "empty input");
}

template <typename Fn>
double TimeMs(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

Histogram ComputeHistogram(std::span<const std::uint8_t> data) {
  Histogram h{};
  for (auto v : data) ++h[v];
  return h;
}

double ShannonEntropy(const Histogram& hist) {
  std::uint64_t n = 0;
  for (auto c : hist) n += c;
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "empty input");
  double h = 0.0;
  for (auto c : hist) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(n);
    h -= p * std::log2(p);
  }
  return h;
}

double ShannonEntropy(std::span<const std::uint8_t> data) {
  if (data.empty()) throw Error(ErrorCode::kEmptyInput, "empty input");
  return ShannonEntropy(ComputeHistogram(data));
}

double Npcr(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  CheckPair(a, b);
  std::size_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += (a[i] != b[i]);
  return 100.0 * static_cast<double>(diff) / static_cast<double>(a.size());
}

double Uaci(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  CheckPair(a, b);
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += static_cast<std::uint64_t>(std::abs(int{a[i]} - int{b[i]}));
  }
  return 100.0 * static_cast<double>(sum) /
         (255.0 * static_cast<double>(a.size()));
}

double Psnr(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  CheckPair(a, b);
  std::uint64_t sq = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int d = int{a[i]} - int{b[i]};
    sq += static_cast<std::uint64_t>(d * d);
  }
  if (sq == 0) return std::numeric_limits<double>::infinity();
  const double mse = static_cast<double>(sq) / static_cast<double>(a.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ChiSquareUniformity(const Histogram& hist) {
  std::uint64_t n = 0;
  for (auto c : hist) n += c;
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "empty histogram");
  const double expected = static_cast<double>(n) / 256.0;
  double chi2 = 0.0;
  for (auto c : hist) {
    const double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  return chi2;
}

DifferentialResult DifferentialTest(const ImageBuffer& img, const Key128& key,
                                    ChainMode mode, bool dynamic,
                                    std::uint8_t delta) {
  const ImageCipher cipher(key, mode, dynamic);
  ImageBuffer perturbed = img;
  auto& px = perturbed.at(img.height() / 2, img.width() / 2, 0);
  px = static_cast<std::uint8_t>(px + delta);

  const CipherImage c1 = cipher.Encrypt(img);
  const CipherImage c2 = cipher.Encrypt(perturbed);
  // Channels are independent streams; compare the one that was touched.
  const auto n = static_cast<std::ptrdiff_t>(c1.header.padded_length());
  std::span<const std::uint8_t> p1(c1.payload.data(), n);
  std::span<const std::uint8_t> p2(c2.payload.data(), n);
  return {Npcr(p1, p2), Uaci(p1, p2)};
}

std::vector<ChannelMetrics> ChannelStatistics(const ImageBuffer& img) {
  std::vector<ChannelMetrics> out;
  for (int ch = 0; ch < img.channels(); ++ch) {
    ChannelMetrics m;
    m.channel = ch;
    m.histogram = ComputeHistogram(img.Plane(ch));
    m.entropy = ShannonEntropy(m.histogram);
    m.histogram_chi2 = ChiSquareUniformity(m.histogram);
    out.push_back(m);
  }
  return out;
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

MetricsReport EvaluateImage(const ImageBuffer& img, const Key128& key,
                            const EvaluateOptions& opts,
                            const std::string& name) {
  const ImageCipher cipher(key, opts.mode, opts.dynamic);
  MetricsReport report;
  report.image = name;
  report.mode = opts.mode;
  report.dynamic = opts.dynamic;
  report.sbox_fingerprint = cipher.fingerprint();

  const int runs = std::max(1, opts.timing_runs);
  std::vector<double> enc_ms;
  std::vector<double> dec_ms;
  CipherImage c;
  ImageBuffer round_trip;
  for (int i = 0; i < runs; ++i) {
    enc_ms.push_back(TimeMs([&] { c = cipher.Encrypt(img); }));
    dec_ms.push_back(TimeMs([&] { round_trip = cipher.Decrypt(c); }));
  }
  if (round_trip != img) {
    throw Error(ErrorCode::kFormat, "decryption did not reproduce the input");
  }
  report.encrypt_ms = Median(enc_ms);
  report.decrypt_ms = Median(dec_ms);

  const ImageBuffer cipher_img = CipherAsImage(c);
  report.per_channel = ChannelStatistics(cipher_img);
  report.psnr_db = Psnr(img.pixels(), cipher_img.pixels());
  const auto diff = DifferentialTest(img, key, opts.mode, opts.dynamic);
  report.npcr = diff.npcr;
  report.uaci = diff.uaci;
  return report;
}

BenchResult Benchmark(const ImageBuffer& img, const Key128& key,
                      ChainMode mode, bool dynamic, int repetitions) {
  const ImageCipher cipher(key, mode, dynamic);
  BenchResult r;
  r.bytes = img.pixels().size();
  r.repetitions = std::max(1, repetitions);
  std::vector<double> enc_ms;
  std::vector<double> dec_ms;
  CipherImage c;
  ImageBuffer back;
  for (int i = 0; i < r.repetitions; ++i) {
    enc_ms.push_back(TimeMs([&] { c = cipher.Encrypt(img); }));
    dec_ms.push_back(TimeMs([&] { back = cipher.Decrypt(c); }));
  }
  r.encrypt_ms = Median(enc_ms);
  r.decrypt_ms = Median(dec_ms);
  const double mb = static_cast<double>(r.bytes) / 1e6;
  r.encrypt_mb_s = r.encrypt_ms > 0 ? mb / (r.encrypt_ms / 1e3) : 0.0;
  r.decrypt_mb_s = r.decrypt_ms > 0 ? mb / (r.decrypt_ms / 1e3) : 0.0;
  return r;
}

}  // namespace castchaos
