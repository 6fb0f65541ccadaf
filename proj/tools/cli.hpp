// Copyright 2026 The AQEC Authors
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

#ifndef AQEC_TOOLS_CLI_HPP
#define AQEC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace aqec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCriteriaFailed = 2;

inline constexpr const char* kVersion = "aqec 1.0.0";

/// Runs one command line. Reports go to `out`, diagnostics to `err`.
/// Returns 0, 1 (input error) or 2 (criteria failed); never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aqec::cli

#endif  // AQEC_TOOLS_CLI_HPP
