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

#ifndef GPW_CERTIFICATE_JSON_HPP_
#define GPW_CERTIFICATE_JSON_HPP_

// JSON form of certificates:
//   {target:{p,m,k}, steps:[{rule,p,a,b,c,u,citation}], base:{k,p,a,source}, value}
// k, c, u and value are decimal strings; value is null when unresolved.

#include <nlohmann/json.hpp>

#include "gpw/reduction.hpp"

namespace gpw {

nlohmann::json to_json(const Certificate& cert);

/// Throws kInvalidArgument on malformed input.
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace gpw

#endif  // GPW_CERTIFICATE_JSON_HPP_
