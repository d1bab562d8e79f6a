// Copyright 2026 The gpqspr Authors
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

#ifndef GPQSPR_CLI_H_
#define GPQSPR_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace gpqspr::cli {

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or self-check failure
inline constexpr int kExitUsage = 2;    // bad arguments, unreadable input

// Runs the command line (without the program name). Subcommands: compute,
// verify, fit, predict, report.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gpqspr::cli

#endif  // GPQSPR_CLI_H_
