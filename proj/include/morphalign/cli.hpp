// Copyright 2026 The MorphAlign Authors
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


// Entry point of the morphalign command-line tool.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morphalign::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitStat = 4;

/// Parses `args` (without the program name), runs one subcommand and
/// returns the process exit code: 2 for usage errors, 3 for unreadable or
/// malformed input, 4 for statistical or configuration errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morphalign::cli
