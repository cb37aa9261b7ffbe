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

#include "cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "castchaos/error.hpp"
#include "castchaos/metrics.hpp"
#include "castchaos/netpbm.hpp"
#include "castchaos/pipeline.hpp"
#include "castchaos/report.hpp"
#include "castchaos/sbox.hpp"

namespace castchaos::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Config {
  std::string input;
  std::string out;
  std::string key_hex;
  std::string mode = "cbc2";
  bool static_tables = false;
  std::string size;
  bool gray = false;
  std::string format = "json";
  bool raw = false;
  std::string export_image;
  bool from_image = false;
  std::string action;
  bool hex = false;
  bool identity = false;
  std::string histogram_out;
  int reps = 11;
  std::string baseline;
  std::string record_baseline;
};

bool UseColor(const std::ostream& err) {
  if (std::getenv("CASTCHAOS_NO_COLOR") != nullptr) return false;
  return &err == &std::cerr && isatty(STDERR_FILENO);
}

int ExitFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return kIo;
    case ErrorCode::kKeyLength: return kKey;
    case ErrorCode::kSBoxMismatch: return kSBoxMismatch;
    case ErrorCode::kDegenerateSequence: return kDegenerateKey;
    default: return kFormat;
  }
}

void Report(std::ostream& err, const std::string& msg) {
  if (UseColor(err)) {
    err << "\x1b[31merror:\x1b[0m " << msg << '\n';
  } else {
    err << "error: " << msg << '\n';
  }
}

std::optional<PreprocessOptions> ParsePreprocess(const Config& cfg) {
  PreprocessOptions opts;
  opts.grayscale = cfg.gray;
  if (!cfg.size.empty()) {
    unsigned w = 0, h = 0;
    char x = 0;
    char extra = 0;
    if (std::sscanf(cfg.size.c_str(), "%u%c%u%c", &w, &x, &h, &extra) != 3 ||
        (x != 'x' && x != 'X') || w == 0 || h == 0) {
      return std::nullopt;
    }
    opts.width = w;
    opts.height = h;
  }
  return opts;
}

ImageBuffer LoadImage(const Config& cfg, const PreprocessOptions& pre) {
  return Preprocess(ReadNetpbm(cfg.input), pre);
}

void WriteText(const std::string& path, const std::string& text) {
  WriteFileBytes(path, std::span(reinterpret_cast<const std::uint8_t*>(
                                     text.data()),
                                 text.size()));
}

bool LooksLikeContainer(const std::vector<std::uint8_t>& bytes) {
  return bytes.size() >= 4 &&
         std::equal(CipherHeader::kMagic.begin(), CipherHeader::kMagic.end(),
                    bytes.begin());
}

int CmdEncrypt(const Config& cfg, const PreprocessOptions& pre,
               std::ostream& out) {
  const Key128 key = Key128::FromHex(cfg.key_hex);
  const ChainMode mode = ParseChainMode(cfg.mode);
  if (!fs::exists(cfg.input)) {
    throw Error(ErrorCode::kIo, "input not found: " + cfg.input);
  }
  const ImageCipher cipher(key, mode, !cfg.static_tables);
  CipherImage c;
  double ms = 0.0;
  if (cfg.raw) {
    const auto data = ReadFileBytes(cfg.input);
    const auto start = std::chrono::steady_clock::now();
    c = cipher.EncryptRaw(data);
    ms = std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start).count();
  } else {
    const ImageBuffer img = LoadImage(cfg, pre);
    const auto start = std::chrono::steady_clock::now();
    c = cipher.Encrypt(img);
    ms = std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start).count();
  }
  WriteFileBytes(cfg.out, c.Serialize());
  if (!cfg.export_image.empty()) ExportCipherImage(cfg.export_image, c);
  out << "fingerprint " << FingerprintHex(c.header.fingerprint) << '\n'
      << "encrypt_ms " << ms << '\n';
  return kOk;
}

int CmdDecrypt(const Config& cfg, std::ostream& out) {
  const Key128 key = Key128::FromHex(cfg.key_hex);
  const CipherImage c = cfg.from_image
                            ? ImportCipherImage(cfg.input)
                            : CipherImage::Parse(ReadFileBytes(cfg.input));
  const ImageCipher cipher(key, c.header.mode, c.header.dynamic);
  const auto start = std::chrono::steady_clock::now();
  if (c.header.raw()) {
    const auto data = cipher.DecryptRaw(c);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start).count();
    WriteFileBytes(cfg.out, data);
    out << "fingerprint " << FingerprintHex(c.header.fingerprint) << '\n'
        << "decrypt_ms " << ms << '\n';
  } else {
    const ImageBuffer img = cipher.Decrypt(c);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start).count();
    WriteNetpbm(cfg.out, img);
    out << "fingerprint " << FingerprintHex(c.header.fingerprint) << '\n'
        << "decrypt_ms " << ms << '\n';
  }
  return kOk;
}

int CmdSbox(const Config& cfg, std::ostream& out) {
  std::array<SBox8, 4> sigmas = {SBox8::Identity(), SBox8::Identity(),
                                 SBox8::Identity(), SBox8::Identity()};
  std::uint64_t fingerprint = DynamicSBoxSet::Compose(sigmas).fingerprint();
  if (!cfg.identity) {
    const auto set = DynamicSBoxSet::FromKey(Key128::FromHex(cfg.key_hex));
    sigmas = set.sigmas();
    fingerprint = set.fingerprint();
  }
  if (cfg.action == "dump") {
    for (int i = 0; i < 4; ++i) {
      out << "# sigma" << (i + 1) << '\n' << DumpSBox(sigmas[i], cfg.hex);
    }
    return kOk;
  }
  json boxes = json::array();
  for (int i = 0; i < 4; ++i) {
    json q = QualityToJson(AnalyzeSBox(sigmas[i].table()));
    q["sigma"] = i + 1;
    boxes.push_back(q);
  }
  out << json{{"fingerprint", FingerprintHex(fingerprint)}, {"sboxes", boxes}}
             .dump(2)
      << '\n';
  return kOk;
}

int CmdMetrics(const Config& cfg, const PreprocessOptions& pre,
               std::ostream& out) {
  const auto bytes = ReadFileBytes(cfg.input);
  MetricsReport report;
  report.image = fs::path(cfg.input).filename().string();
  if (LooksLikeContainer(bytes)) {
    const CipherImage c = CipherImage::Parse(bytes);
    const ImageBuffer img = CipherAsImage(c);
    report.mode = c.header.mode;
    report.dynamic = c.header.dynamic;
    report.sbox_fingerprint = c.header.fingerprint;
    report.per_channel = ChannelStatistics(img);
    if (!cfg.key_hex.empty()) {
      const ImageBuffer plain = DecryptImage(c, Key128::FromHex(cfg.key_hex));
      report.psnr_db = Psnr(plain.pixels(), img.pixels());
    }
  } else {
    const ImageBuffer img = Preprocess(ParseNetpbm(bytes), pre);
    if (cfg.key_hex.empty()) {
      report.per_channel = ChannelStatistics(img);
    } else {
      EvaluateOptions opts;
      opts.mode = ParseChainMode(cfg.mode);
      opts.dynamic = !cfg.static_tables;
      opts.timing_runs = cfg.reps;
      report = EvaluateImage(img, Key128::FromHex(cfg.key_hex), opts,
                             report.image);
    }
  }
  if (!cfg.histogram_out.empty()) {
    WriteText(cfg.histogram_out, HistogramCsv(report));
  }
  if (cfg.format == "csv") {
    out << ReportToCsv(report);
  } else {
    out << ReportToJson(report).dump(2) << '\n';
  }
  return kOk;
}

int CmdDifftest(const Config& cfg, const PreprocessOptions& pre,
                std::ostream& out) {
  const Key128 key = Key128::FromHex(cfg.key_hex);
  const ChainMode mode = ParseChainMode(cfg.mode);
  const ImageBuffer img = LoadImage(cfg, pre);
  const auto r = DifferentialTest(img, key, mode, !cfg.static_tables);
  const double bound = 100.0 * 8.0 / static_cast<double>(img.plane_size());
  out << json{{"image", fs::path(cfg.input).filename().string()},
              {"mode", std::string(ChainModeName(mode))},
              {"dynamic", !cfg.static_tables},
              {"npcr", r.npcr},
              {"uaci", r.uaci},
              {"one_block_npcr_bound", bound}}
             .dump(2)
      << '\n';
  return kOk;
}

int CmdBench(const Config& cfg, const PreprocessOptions& pre,
             std::ostream& out, std::ostream& err) {
  const Key128 key = Key128::FromHex(cfg.key_hex);
  const ChainMode mode = ParseChainMode(cfg.mode);
  const ImageBuffer img = LoadImage(cfg, pre);
  const BenchResult r =
      Benchmark(img, key, mode, !cfg.static_tables, cfg.reps);
  json j = BenchToJson(r);
  j["mode"] = std::string(ChainModeName(mode));
  j["dynamic"] = !cfg.static_tables;
  int status = kOk;
  if (!cfg.baseline.empty()) {
    const auto text = ReadFileBytes(cfg.baseline);
    const json base = json::parse(text.begin(), text.end(), nullptr, false);
    if (base.is_discarded() || !base.contains("encrypt_mb_s") ||
        !base.contains("decrypt_mb_s")) {
      throw Error(ErrorCode::kFormat, "baseline file is not a bench report");
    }
    const double enc_ratio =
        base["encrypt_mb_s"].get<double>() / std::max(r.encrypt_mb_s, 1e-12);
    const double dec_ratio =
        base["decrypt_mb_s"].get<double>() / std::max(r.decrypt_mb_s, 1e-12);
    const bool ok = enc_ratio <= 2.0 && dec_ratio <= 2.0;
    j["baseline_slowdown"] = {{"encrypt", enc_ratio}, {"decrypt", dec_ratio}};
    j["within_baseline"] = ok;
    if (!ok) {
      Report(err, "throughput regressed more than 2x against " + cfg.baseline);
      status = kCheckFailed;
    }
  }
  if (!cfg.record_baseline.empty()) {
    WriteText(cfg.record_baseline, BenchToJson(r).dump(2) + "\n");
  }
  out << j.dump(2) << '\n';
  return status;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  CLI::App app{"Image encryption with CAST-128 and chaotic key-dependent "
               "S-boxes"};
  app.require_subcommand(1);

  auto add_key = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--key", cfg.key_hex, "128-bit key, 32 hex digits");
    if (required) opt->required();
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "Chaining mode: ecb, cbc, cbc2")
        ->check(CLI::IsMember({"ecb", "cbc", "cbc2"}, CLI::ignore_case));
    sub->add_flag("--static", cfg.static_tables,
                  "Use the standard CAST-128 tables instead of keyed S-boxes");
  };
  auto add_pre = [&](CLI::App* sub) {
    sub->add_option("--size", cfg.size, "Resize to WxH (nearest neighbour)");
    sub->add_flag("--gray", cfg.gray, "Convert to grayscale first");
  };

  auto* enc = app.add_subcommand("encrypt", "Encrypt a PGM/PPM image or raw file");
  enc->add_option("input", cfg.input, "Input file")->required();
  enc->add_option("--out", cfg.out, "Output container")->required();
  add_key(enc, true);
  add_mode(enc);
  add_pre(enc);
  enc->add_flag("--raw", cfg.raw, "Treat the input as raw bytes");
  enc->add_option("--export-image", cfg.export_image,
                  "Also write the cipher image as PGM/PPM with a .hdr sidecar");

  auto* dec = app.add_subcommand("decrypt", "Decrypt a container");
  dec->add_option("input", cfg.input, "Container file")->required();
  dec->add_option("--out", cfg.out, "Output image or raw file")->required();
  add_key(dec, true);
  dec->add_flag("--from-image", cfg.from_image,
                "Input is an exported cipher image with a .hdr sidecar");

  auto* sbox = app.add_subcommand("sbox", "Dump or analyze the keyed S-boxes");
  sbox->add_option("action", cfg.action, "dump or analyze")
      ->required()
      ->check(CLI::IsMember({"dump", "analyze"}));
  add_key(sbox, false);
  sbox->add_flag("--hex", cfg.hex, "Dump in hex instead of decimal");
  sbox->add_flag("--identity", cfg.identity,
                 "Use identity permutations instead of keyed ones");

  auto* met = app.add_subcommand("metrics", "Entropy, histogram, NPCR/UACI, PSNR");
  met->add_option("input", cfg.input, "Image or container")->required();
  add_key(met, false);
  add_mode(met);
  add_pre(met);
  met->add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  met->add_option("--histogram", cfg.histogram_out,
                  "Write the 256-row histogram CSV here");
  met->add_option("--reps", cfg.reps, "Timing repetitions")
      ->check(CLI::PositiveNumber);

  auto* diff = app.add_subcommand("difftest", "One-pixel differential test");
  diff->add_option("input", cfg.input, "Image")->required();
  add_key(diff, true);
  add_mode(diff);
  add_pre(diff);

  auto* bench = app.add_subcommand("bench", "Encrypt/decrypt throughput");
  bench->add_option("input", cfg.input, "Image")->required();
  add_key(bench, true);
  add_mode(bench);
  add_pre(bench);
  bench->add_option("--reps", cfg.reps, "Repetitions")
      ->check(CLI::PositiveNumber);
  bench->add_option("--baseline", cfg.baseline,
                    "Fail if more than 2x slower than this recorded report");
  bench->add_option("--record-baseline", cfg.record_baseline,
                    "Write this run as a baseline report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    Report(err, e.what());
    return kUsage;
  }
  std::transform(cfg.mode.begin(), cfg.mode.end(), cfg.mode.begin(),
                 [](unsigned char c) { return std::tolower(c); });

  const auto pre = ParsePreprocess(cfg);
  if (!pre) {
    Report(err, "--size must look like 256x256");
    return kUsage;
  }
  if (*sbox && !cfg.identity && cfg.key_hex.empty()) {
    Report(err, "sbox needs --key or --identity");
    return kUsage;
  }

  try {
    if (*enc) return CmdEncrypt(cfg, *pre, out);
    if (*dec) return CmdDecrypt(cfg, out);
    if (*sbox) return CmdSbox(cfg, out);
    if (*met) return CmdMetrics(cfg, *pre, out);
    if (*diff) return CmdDifftest(cfg, *pre, out);
    if (*bench) return CmdBench(cfg, *pre, out, err);
  } catch (const Error& e) {
    Report(err, std::string(ErrorCodeName(e.code())) + ": " + e.what());
    return ExitFor(e.code());
  } catch (const std::exception& e) {
    Report(err, e.what());
    return kIo;
  }
  return kUsage;
}

}  // namespace castchaos::cli
