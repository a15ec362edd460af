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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace obext::cli {

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUnknown = 3;

/// Runs one subcommand. `args` excludes the program name. Payloads named
/// "-" are read from `in`; results go to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace obext::cli
