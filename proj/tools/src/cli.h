// Copyright 2026 The qmat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMAT_TOOLS_CLI_H_
#define QMAT_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "qmat/subspace.h"

namespace qmat::cli {

// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;   // a check failed; witnesses printed
inline constexpr int kExitUsage = 2;  // bad arguments or unreadable input
inline constexpr int kExitCap = 3;    // enumeration or search cap hit

struct CliConfig {
  Caps caps;
  std::string format = "text";  // text, json or dot
  unsigned jobs = 1;
  std::uint64_t seed = 20260101;
};

// Parses argv and runs one subcommand. Nothing is written to std::cout or
// std::cerr directly, so tests can capture both streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmat::cli

#endif  // QMAT_TOOLS_CLI_H_
