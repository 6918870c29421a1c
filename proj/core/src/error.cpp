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

#include "gpw/error.hpp"

namespace gpw {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kNotCoprime: return "NotCoprime";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kInvalidPrime: return "InvalidPrime";
    case Errc::kNotNormalized: return "NotNormalized";
    case Errc::kNotPrimitiveRoot: return "NotPrimitiveRoot";
    case Errc::kPreconditionFailed: return "PreconditionFailed";
    case Errc::kNonExistent: return "NonExistent";
    case Errc::kWitnessVerificationFailed: return "WitnessVerificationFailed";
    case Errc::kUnknownFamily: return "UnknownFamily";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace gpw
