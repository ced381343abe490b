// Copyright 2026 The ghzbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GHZBELL_TOOLS_CLI_H_
#define GHZBELL_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace ghzbell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Environment variable consulted for the default --seed.
inline constexpr const char* kSeedEnvVar = "GHZBELL_SEED";

// Runs the command line `args` (args[0] is the program name) and returns the
// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghzbell::cli

#endif  // GHZBELL_TOOLS_CLI_H_
