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

#include "castchaos/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace castchaos {

std::string FingerprintHex(std::uint64_t fp) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fp));
  return buf;
}

nlohmann::json ReportToJson(const MetricsReport& report) {
  nlohmann::json channels = nlohmann::json::array();
  for (const auto& ch : report.per_channel) {
    channels.push_back({{"channel", ch.channel},
                        {"entropy", ch.entropy},
                        {"histogram_chi2", ch.histogram_chi2}});
  }
  nlohmann::json j;
  j["image"] = report.image;
  j["mode"] = std::string(ChainModeName(report.mode));
  j["dynamic"] = report.dynamic;
  j["per_channel"] = channels;
  j["npcr"] = report.npcr;
  j["uaci"] = report.uaci;
  j["psnr_db"] = std::isfinite(report.psnr_db) ? nlohmann::json(report.psnr_db)
                                               : nlohmann::json(nullptr);
  j["encrypt_ms"] = report.encrypt_ms;
  j["decrypt_ms"] = report.decrypt_ms;
  j["sbox_fingerprint"] = FingerprintHex(report.sbox_fingerprint);
  return j;
}

std::string ReportToCsv(const MetricsReport& report) {
  std::ostringstream out;
  out.precision(10);
  out << "image,mode,dynamic,channel,entropy,histogram_chi2,npcr,uaci,psnr_db,"
         "encrypt_ms,decrypt_ms,sbox_fingerprint\n";
  for (const auto& ch : report.per_channel) {
    out << report.image << ',' << ChainModeName(report.mode) << ','
        << (report.dynamic ? "true" : "false") << ',' << ch.channel << ','
        << ch.entropy << ',' << ch.histogram_chi2 << ',' << report.npcr << ','
        << report.uaci << ',';
    if (std::isfinite(report.psnr_db)) out << report.psnr_db;
    else out << "inf";
    out << ',' << report.encrypt_ms << ',' << report.decrypt_ms << ','
        << FingerprintHex(report.sbox_fingerprint) << '\n';
  }
  return out.str();
}

std::string HistogramCsv(const MetricsReport& report) {
  std::ostringstream out;
  out << "value";
  for (const auto& ch : report.per_channel) out << ",ch" << ch.channel;
  out << '\n';
  for (int v = 0; v < 256; ++v) {
    out << v;
    for (const auto& ch : report.per_channel) out << ',' << ch.histogram[v];
    out << '\n';
  }
  return out.str();
}

nlohmann::json BenchToJson(const BenchResult& bench) {
  return {{"bytes", bench.bytes},
          {"repetitions", bench.repetitions},
          {"encrypt_ms", bench.encrypt_ms},
          {"decrypt_ms", bench.decrypt_ms},
          {"encrypt_mb_s", bench.encrypt_mb_s},
          {"decrypt_mb_s", bench.decrypt_mb_s}};
}

nlohmann::json QualityToJson(const SBoxQuality& q) {
  nlohmann::json sac = nlohmann::json::array();
  for (const auto& row : q.sac) sac.push_back(row);
  return {{"bijective", q.bijective},
          {"nonlinearity", q.nonlinearity},
          {"coordinate_nonlinearity", q.coordinate_nonlinearity},
          {"differential_uniformity", q.differential_uniformity},
          {"fixed_points", q.fixed_points},
          {"sac_mean_deviation", q.sac_mean_deviation},
          {"sac", sac}};
}

std::string DumpSBox(const SBox8& s, bool hex) {
  std::string out;
  char buf[8];
  for (int row = 0; row < 32; ++row) {
    for (int col = 0; col < 8; ++col) {
      const unsigned v = s.table()[row * 8 + col];
      std::snprintf(buf, sizeof(buf), hex ? "%02X" : "%u", v);
      if (col) out.push_back(' ');
      out += buf;
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace castchaos
