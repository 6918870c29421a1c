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

#ifndef GPW_VERIFY_HPP_
#define GPW_VERIFY_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gpw {

/// One named property inside a suite.
struct CheckResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  /// First few violations, human readable.
  std::vector<std::string> failures;

  bool passed() const { return violations == 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t max_q = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  std::chrono::milliseconds elapsed{0};

  bool passed() const;
  const CheckResult* find(const std::string& check) const;
};

struct VerifyOptions {
  /// 0 selects the suite default (see default_max_q).
  std::uint64_t max_q = 0;
  unsigned threads = 0;  // 0: hardware concurrency
  std::uint64_t budget = std::uint64_t{1} << 20;
};

const std::vector<std::string>& suite_names();
std::uint64_t default_max_q(const std::string& suite);

/// Throws kInvalidArgument for an unknown suite name or a max_q above budget.
SuiteReport run_suite(const std::string& suite, const VerifyOptions& options);

SuiteReport verify_reduction(const VerifyOptions& options);
SuiteReport verify_psi(const VerifyOptions& options);
SuiteReport verify_decomposition(const VerifyOptions& options);
SuiteReport verify_existence(const VerifyOptions& options);
SuiteReport verify_semiprimitive(const VerifyOptions& options);
SuiteReport verify_kononen(const VerifyOptions& options);
SuiteReport verify_catalog(const VerifyOptions& options);

nlohmann::json to_json(const SuiteReport& report);

}  // namespace gpw

#endif  // GPW_VERIFY_HPP_
