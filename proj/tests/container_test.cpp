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

#include "castchaos/container.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "castchaos/error.hpp"
#include "castchaos/netpbm.hpp"
#include "castchaos/pipeline.hpp"
#include "test_util.hpp"

namespace castchaos {
namespace {

namespace fs = std::filesystem;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kFormat;
}

TEST(HeaderTest, GoldenBytes) {
  CipherHeader h;
  h.mode = ChainMode::kCbc2;
  h.dynamic = true;
  h.channels = 3;
  h.width = 512;
  h.height = 256;
  h.original_length = 512 * 256;
  h.fingerprint = 0x0123456789ABCDEFull;
  const std::array<std::uint8_t, 32> expected = {
      'C',  'L',  'S',  'M',  0x01, 0x02, 0x01, 0x03,  // magic ver mode flags ch
      0x00, 0x00, 0x02, 0x00,                          // width
      0x00, 0x00, 0x01, 0x00,                          // height
      0x00, 0x00, 0x00, 0x00, 0x00, 0x02, 0x00, 0x00,  // length
      0x01, 0x23, 0x45, 0x67, 0x89, 0xAB, 0xCD, 0xEF,  // fingerprint
  };
  EXPECT_EQ(h.Serialize(), expected);
  EXPECT_EQ(CipherHeader::Parse(expected), h);
}

TEST(HeaderTest, ParseSerializeIdentity) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    CipherHeader h;
    h.mode = static_cast<ChainMode>(rng() % 3);
    h.dynamic = rng() & 1;
    h.channels = (rng() & 1) ? 3 : 1;
    h.width = static_cast<std::uint32_t>(1 + rng() % 5000);
    h.height = static_cast<std::uint32_t>(1 + rng() % 5000);
    h.original_length = std::uint64_t{h.width} * h.height;
    h.fingerprint = h.dynamic ? rng() : 0;
    ASSERT_EQ(CipherHeader::Parse(h.Serialize()), h);
  }
}

TEST(HeaderTest, RejectsCorruption) {
  CipherHeader h;
  h.channels = 1;
  h.width = 8;
  h.height = 8;
  h.original_length = 64;
  const auto good = h.Serialize();
  auto mutate = [&](int at, std::uint8_t v) {
    auto b = good;
    b[at] = v;
    return CodeOf([&] { CipherHeader::Parse(b); });
  };
  EXPECT_EQ(mutate(0, 'X'), ErrorCode::kBadHeader);
  EXPECT_EQ(mutate(4, 2), ErrorCode::kBadHeader);
  EXPECT_EQ(mutate(5, 3), ErrorCode::kBadHeader);
  EXPECT_EQ(mutate(6, 0x80), ErrorCode::kBadHeader);
  EXPECT_EQ(mutate(7, 2), ErrorCode::kBadHeader);
  EXPECT_EQ(mutate(23, 65), ErrorCode::kBadHeader);
  EXPECT_EQ(CodeOf([&] {
              CipherHeader::Parse(std::span(good).first(31));
            }),
            ErrorCode::kBadHeader);
}

class PipelineTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{42};
};

TEST_F(PipelineTest, RoundTripEveryModeAndTableChoice) {
  for (int trial = 0; trial < 100; ++trial) {
    const Key128 key = testing::UsableKey(rng_);
    const int channels = (trial % 2) ? 3 : 1;
    const ImageBuffer img = testing::RandomImage(
        rng_, 8 * (1 + rng_() % 16), 1 + rng_() % 16, channels);
    for (auto mode : {ChainMode::kEcb, ChainMode::kCbc, ChainMode::kCbc2}) {
      for (bool dynamic : {false, true}) {
        const CipherImage c = EncryptImage(img, key, mode, dynamic);
        const CipherImage parsed = CipherImage::Parse(c.Serialize());
        ASSERT_EQ(parsed, c);
        ASSERT_EQ(DecryptImage(parsed, key), img);
      }
    }
  }
}

TEST_F(PipelineTest, HeaderDescribesTheImage) {
  const ImageBuffer img = testing::RandomImage(rng_, 16, 4, 3);
  const Key128 key = testing::UsableKey(rng_);
  const CipherImage c = EncryptImage(img, key, ChainMode::kCbc, true);
  EXPECT_EQ(c.header.width, 16u);
  EXPECT_EQ(c.header.height, 4u);
  EXPECT_EQ(c.header.channels, 3);
  EXPECT_EQ(c.header.original_length, 64u);
  EXPECT_EQ(c.header.fingerprint, DynamicSBoxSet::FromKey(key).fingerprint());
  EXPECT_EQ(c.payload.size(), 3u * 64u);
  EXPECT_EQ(EncryptImage(img, key, ChainMode::kCbc, false).header.fingerprint,
            0u);
}

TEST_F(PipelineTest, ChannelsAreIndependentStreams) {
  const Key128 key = testing::UsableKey(rng_);
  const ImageBuffer rgb = testing::RandomImage(rng_, 32, 8, 3);
  const CipherImage c = EncryptImage(rgb, key);
  for (int ch = 0; ch < 3; ++ch) {
    const ImageBuffer gray(32, 8, 1, rgb.Plane(ch));
    const CipherImage g = EncryptImage(gray, key);
    EXPECT_TRUE(std::equal(g.payload.begin(), g.payload.end(),
                           c.payload.begin() + ch * 256));
  }
}

TEST_F(PipelineTest, WrongKeyIsDetectedInDynamicMode) {
  const Key128 key = testing::UsableKey(rng_);
  const ImageBuffer img = testing::RandomImage(rng_, 16, 16, 1);
  const CipherImage c = EncryptImage(img, key);
  int detected = 0;
  for (int i = 0; i < 1000; ++i) {
    const Key128 wrong = testing::RandomKey(rng_);
    try {
      DecryptImage(c, wrong);
    } catch (const Error& e) {
      detected += e.code() == ErrorCode::kSBoxMismatch ||
                  e.code() == ErrorCode::kDegenerateSequence;
    }
  }
  EXPECT_EQ(detected, 1000);
}

TEST_F(PipelineTest, TamperedMagicIsBadHeader) {
  const Key128 key = testing::UsableKey(rng_);
  auto bytes = EncryptImage(testing::RandomImage(rng_, 8, 8, 1), key).Serialize();
  bytes[1] ^= 0xFF;
  EXPECT_EQ(CodeOf([&] { CipherImage::Parse(bytes); }), ErrorCode::kBadHeader);
}

TEST_F(PipelineTest, TruncatedPayloadIsBadHeader) {
  const Key128 key = testing::UsableKey(rng_);
  auto bytes = EncryptImage(testing::RandomImage(rng_, 8, 8, 1), key).Serialize();
  bytes.pop_back();
  EXPECT_EQ(CodeOf([&] { CipherImage::Parse(bytes); }), ErrorCode::kBadHeader);
}

TEST_F(PipelineTest, UnalignedImageRejected) {
  const Key128 key = testing::UsableKey(rng_);
  EXPECT_EQ(CodeOf([&] { EncryptImage(ImageBuffer(3, 3, 1), key); }),
            ErrorCode::kBadDimensions);
}

TEST_F(PipelineTest, RawDataIsPaddedAndRestored) {
  const Key128 key = testing::UsableKey(rng_);
  for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 1000u}) {
    const auto data = testing::RandomBytes(rng_, n);
    const ImageCipher cipher(key, ChainMode::kCbc2);
    const CipherImage c = cipher.EncryptRaw(data);
    EXPECT_TRUE(c.header.raw());
    EXPECT_EQ(c.header.original_length, n);
    EXPECT_EQ(c.payload.size(), (n + 7) / 8 * 8);
    const CipherImage parsed = CipherImage::Parse(c.Serialize());
    EXPECT_EQ(DecryptRaw(parsed, key), data);
  }
}

TEST_F(PipelineTest, ExportImportThroughNetpbm) {
  const Key128 key = testing::UsableKey(rng_);
  const ImageBuffer img = testing::RandomImage(rng_, 16, 8, 3);
  const CipherImage c = EncryptImage(img, key);
  const fs::path dir = fs::temp_directory_path() / "castchaos_export_test";
  fs::create_directories(dir);
  const fs::path path = dir / "cipher.ppm";
  ExportCipherImage(path, c);
  EXPECT_TRUE(fs::exists(dir / "cipher.ppm.hdr"));
  EXPECT_EQ(ReadNetpbm(path), CipherAsImage(c));
  const CipherImage back = ImportCipherImage(path);
  EXPECT_EQ(back, c);
  EXPECT_EQ(DecryptImage(back, key), img);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace castchaos
