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

#include <string>

#include <json.hpp>

#include "castchaos/metrics.hpp"
#include "castchaos/sbox.hpp"

namespace castchaos {

// 16 lowercase hex digits.
std::string FingerprintHex(std::uint64_t fp);

// JSON report: { image, mode, dynamic, per_channel: [{channel, entropy,
// histogram_chi2}], npcr, uaci, psnr_db, encrypt_ms, decrypt_ms,
// sbox_fingerprint }. An infinite PSNR is written as null.
nlohmann::json ReportToJson(const MetricsReport& report);
// Header line plus one row per channel; shared columns repeat.
std::string ReportToCsv(const MetricsReport& report);
// "value,<ch0>,<ch1>..." followed by 256 rows.
std::string HistogramCsv(const MetricsReport& report);

nlohmann::json BenchToJson(const BenchResult& bench);
nlohmann::json QualityToJson(const SBoxQuality& quality);

// 32 lines of 8 values; decimal or two-digit uppercase hex.
std::string DumpSBox(const SBox8& s, bool hex = false);

}  // namespace castchaos
