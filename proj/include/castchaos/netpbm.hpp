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

#include <filesystem>
#include <span>
#include <vector>

#include "castchaos/image.hpp"

namespace castchaos {

// Binary netpbm: P5 (gray) and P6 (RGB), maxval 255 only.
ImageBuffer ParseNetpbm(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> EncodeNetpbm(const ImageBuffer& img);

ImageBuffer ReadNetpbm(const std::filesystem::path& path);
void WriteNetpbm(const std::filesystem::path& path, const ImageBuffer& img);

std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path);
// Writes to a temporary sibling and renames, so a failed write leaves no
// partial file behind.
void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const std::uint8_t> data);

}  // namespace castchaos
