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

#ifndef GPW_ERROR_HPP_
#define GPW_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpw {

enum class Errc {
  kInvalidArgument,
  kNotCoprime,
  kBudgetExceeded,
  kInvalidPrime,
  kNotNormalized,
  kNotPrimitiveRoot,
  kPreconditionFailed,
  kNonExistent,
  kWitnessVerificationFailed,
  kUnknownFamily,
};

std::string_view to_string(Errc code);

/// The single exception type thrown by the library. Callers dispatch on
/// code(); what() carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gpw

#endif  // GPW_ERROR_HPP_
