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

#include "castchaos/error.hpp"

namespace castchaos {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain: return "DomainError";
    case ErrorCode::kDegenerateSequence: return "DegenerateSequence";
    case ErrorCode::kNotBijective: return "NotBijective";
    case ErrorCode::kKeyLength: return "KeyLength";
    case ErrorCode::kBadDimensions: return "BadDimensions";
    case ErrorCode::kBadHeader: return "BadHeader";
    case ErrorCode::kSBoxMismatch: return "SBoxMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kFormat: return "FormatError";
  }
  return "UnknownError";
}

}  // namespace castchaos
