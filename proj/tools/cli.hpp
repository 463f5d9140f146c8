// Copyright 2026 The Authors.
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

#ifndef CYCLOMATROID_TOOLS_CLI_HPP_
#define CYCLOMATROID_TOOLS_CLI_HPP_

#include <ostream>

namespace cyclomatroid::cli {

// Process exit codes.
inline constexpr int kExitFound = 0;
inline constexpr int kExitNone = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitVerifyFailure = 4;
inline constexpr int kExitCounterexample = 5;
inline constexpr int kExitBudget = 6;

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclomatroid::cli

#endif  // CYCLOMATROID_TOOLS_CLI_HPP_
