// Copyright 2026 The gpwaring Authors
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

#ifndef GPW_TOOLS_CLI_HPP_
#define GPW_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace gpw::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnresolved = 2;
inline constexpr int kExitNonExistent = 3;
inline constexpr int kExitViolations = 4;

/// Version of the JSON output schemas.
inline constexpr const char* kSchemaVersion = "1";

const char* tool_version();

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpw::cli

#endif  // GPW_TOOLS_CLI_HPP_
