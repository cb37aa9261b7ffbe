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

#include <ostream>

namespace castchaos::cli {

// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kIo = 3,
  kFormat = 4,
  kKey = 5,
  kSBoxMismatch = 6,
  kDegenerateKey = 7,
};

// Entry point shared by the executable and the tests.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace castchaos::cli
