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
#include <span>
#include <string_view>
#include <vector>

#include "castchaos/cast128.hpp"

namespace castchaos {

enum class ChainMode : std::uint8_t { kEcb = 0, kCbc = 1, kCbc2 = 2 };

std::string_view ChainModeName(ChainMode mode);
// Accepts "ecb", "cbc", "cbc2" (case-insensitive).
ChainMode ParseChainMode(std::string_view name);

// IV for the forward CBC pass: E(Km1 || Km2).
Block64 ForwardIv(const CipherState& state);
// IV for the backward CBC2 pass: E(Km3 || Km4).
Block64 BackwardIv(const CipherState& state);

// In-place encryption of whole 64-bit blocks. data.size() must be a
// multiple of 8 (Error(kBadDimensions) otherwise).
//
// CBC2 runs a forward CBC pass, then a second CBC pass from the last block
// to the first: D[i] = E(C[i] ^ D[i+1]) with D[n] = BackwardIv. Any change
// to one plaintext block therefore reaches every ciphertext block.
void EncryptBlocks(const CipherState& state, ChainMode mode,
                   std::span<std::uint8_t> data);
void DecryptBlocks(const CipherState& state, ChainMode mode,
                   std::span<std::uint8_t> data);

}  // namespace castchaos
