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

#include "castchaos/modes.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "castchaos/error.hpp"

namespace castchaos {

namespace {

std::uint64_t LoadBlock(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = v << 8 | p[i];
  return v;
}

void StoreBlock(std::uint64_t v, std::uint8_t* p) {
  for (int i = 7; i >= 0; --i) {
    p[i] = static_cast<std::uint8_t>(v);
    v >>= 8;
  }
}

std::uint64_t Enc(const CipherState& s, std::uint64_t v) {
  return s.Encrypt(Block64::FromU64(v)).ToU64();
}

std::uint64_t Dec(const CipherState& s, std::uint64_t v) {
  return s.Decrypt(Block64::FromU64(v)).ToU64();
}

void CheckLength(std::span<const std::uint8_t> data) {
  if (data.size() % 8 != 0) {
    throw Error(ErrorCode::kBadDimensions,
                "data length " + std::to_string(data.size()) +
                    " is not a multiple of the 8-byte block size");
  }
}

void CbcForwardEncrypt(const CipherState& s, std::uint64_t iv,
                       std::span<std::uint8_t> data) {
  std::uint64_t prev = iv;
  for (std::size_t off = 0; off < data.size(); off += 8) {
    prev = Enc(s, LoadBlock(&data[off]) ^ prev);
    StoreBlock(prev, &data[off]);
  }
}

void CbcForwardDecrypt(const CipherState& s, std::uint64_t iv,
                       std::span<std::uint8_t> data) {
  std::uint64_t prev = iv;
  for (std::size_t off = 0; off < data.size(); off += 8) {
    const std::uint64_t c = LoadBlock(&data[off]);
    StoreBlock(Dec(s, c) ^ prev, &data[off]);
    prev = c;
  }
}

void CbcBackwardEncrypt(const CipherState& s, std::uint64_t iv,
                        std::span<std::uint8_t> data) {
  std::uint64_t next = iv;
  for (std::size_t off = data.size(); off > 0; off -= 8) {
    next = Enc(s, LoadBlock(&data[off - 8]) ^ next);
    StoreBlock(next, &data[off - 8]);
  }
}

void CbcBackwardDecrypt(const CipherState& s, std::uint64_t iv,
                        std::span<std::uint8_t> data) {
  std::uint64_t next = iv;
  for (std::size_t off = data.size(); off > 0; off -= 8) {
    const std::uint64_t c = LoadBlock(&data[off - 8]);
    StoreBlock(Dec(s, c) ^ next, &data[off - 8]);
    next = c;
  }
}

}  // namespace

std::string_view ChainModeName(ChainMode mode) {
  switch (mode) {
    case ChainMode::kEcb: return "ecb";
    case ChainMode::kCbc: return "cbc";
    case ChainMode::kCbc2: return "cbc2";
  }
  return "unknown";
}

ChainMode ParseChainMode(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "ecb") return ChainMode::kEcb;
  if (lower == "cbc") return ChainMode::kCbc;
  if (lower == "cbc2") return ChainMode::kCbc2;
  throw Error(ErrorCode::kFormat, "unknown chaining mode '" + lower + "'");
}

Block64 ForwardIv(const CipherState& state) {
  return state.Encrypt({state.km()[0], state.km()[1]});
}

Block64 BackwardIv(const CipherState& state) {
  return state.Encrypt({state.km()[2], state.km()[3]});
}

void EncryptBlocks(const CipherState& state, ChainMode mode,
                   std::span<std::uint8_t> data) {
  CheckLength(data);
  switch (mode) {
    case ChainMode::kEcb:
      for (std::size_t off = 0; off < data.size(); off += 8) {
        StoreBlock(Enc(state, LoadBlock(&data[off])), &data[off]);
      }
      break;
    case ChainMode::kCbc:
      CbcForwardEncrypt(state, ForwardIv(state).ToU64(), data);
      break;
    case ChainMode::kCbc2:
      CbcForwardEncrypt(state, ForwardIv(state).ToU64(), data);
      CbcBackwardEncrypt(state, BackwardIv(state).ToU64(), data);
      break;
  }
}

void DecryptBlocks(const CipherState& state, ChainMode mode,
                   std::span<std::uint8_t> data) {
  CheckLength(data);
  switch (mode) {
    case ChainMode::kEcb:
      for (std::size_t off = 0; off < data.size(); off += 8) {
        StoreBlock(Dec(state, LoadBlock(&data[off])), &data[off]);
      }
      break;
    case ChainMode::kCbc:
      CbcForwardDecrypt(state, ForwardIv(state).ToU64(), data);
      break;
    case ChainMode::kCbc2:
      CbcBackwardDecrypt(state, BackwardIv(state).ToU64(), data);
      CbcForwardDecrypt(state, ForwardIv(state).ToU64(), data);
      break;
  }
}

}  // namespace castchaos
