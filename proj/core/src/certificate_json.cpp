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

#include "gpw/certificate_json.hpp"

#include <string>

#include "gpw/error.hpp"

namespace gpw {

using nlohmann::json;

json to_json(const Certificate& cert) {
  json steps = json::array();
  for (const ReductionStep& s : cert.steps) {
    steps.push_back({{"rule", to_string(s.rule)},
                     {"p", s.p},
                     {"a", s.a},
                     {"b", s.b},
                     {"c", to_decimal(s.c)},
                     {"u", to_decimal(s.u)},
                     {"citation", s.citation}});
  }
  return {
      {"target", {{"p", cert.p}, {"m", cert.m}, {"k", to_decimal(cert.k)}}},
      {"steps", std::move(steps)},
      {"base",
       {{"k", to_decimal(cert.base_k)},
        {"p", cert.p},
        {"a", cert.base_a},
        {"source", source_name(cert)}}},
      {"value", cert.value ? json(to_decimal(*cert.value)) : json(nullptr)},
  };
}

namespace {

BaseSource parse_source(const std::string& name, std::string& catalog_id) {
  const std::string prefix = "CatalogEntry(";
  if (name.size() > prefix.size() + 1 && name.compare(0, prefix.size(), prefix) == 0 &&
      name.back() == ')') {
    catalog_id = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    return BaseSource::kCatalogEntry;
  }
  for (BaseSource s : {BaseSource::kTrivial, BaseSource::kBFS, BaseSource::kSmallBound,
                       BaseSource::kSemiprimitive, BaseSource::kExceptional,
                       BaseSource::kKononen1, BaseSource::kKononen2,
                       BaseSource::kUnresolved}) {
    if (to_string(s) == name) return s;
  }
  throw Error(Errc::kInvalidArgument, "unknown base source '" + name + "'");
}

}  // namespace

Certificate certificate_from_json(const json& j) {
  try {
    Certificate cert;
    const json& target = j.at("target");
    cert.p = target.at("p").get<std::uint64_t>();
    cert.m = target.at("m").get<unsigned>();
    cert.k = parse_decimal(target.at("k").get<std::string>());
    BigInt multiplier = 1;
    for (const json& s : j.at("steps")) {
      ReductionStep step;
      step.rule = parse_rule(s.at("rule").get<std::string>());
      step.p = s.at("p").get<std::uint64_t>();
      step.a = s.at("a").get<std::uint64_t>();
      step.b = s.at("b").get<std::uint64_t>();
      step.c = parse_decimal(s.at("c").get<std::string>());
      step.u = parse_decimal(s.at("u").get<std::string>());
      step.citation = s.at("citation").get<std::string>();
      multiplier *= step.b;
      cert.steps.push_back(std::move(step));
    }
    const json& base = j.at("base");
    cert.base_k = parse_decimal(base.at("k").get<std::string>());
    if (base.at("p").get<std::uint64_t>() != cert.p) {
      throw Error(Errc::kInvalidArgument, "base characteristic differs from target");
    }
    cert.base_a = base.at("a").get<unsigned>();
    cert.source = parse_source(base.at("source").get<std::string>(), cert.catalog_id);
    const json& value = j.at("value");
    if (!value.is_null()) {
      cert.value = parse_decimal(value.get<std::string>());
      if (multiplier == 0 || *cert.value % multiplier != 0) {
        throw Error(Errc::kInvalidArgument, "value is not a multiple of the step factors");
      }
      cert.base_value = *cert.value / multiplier;
    }
    return cert;
  } catch (const json::exception& e) {
    throw Error(Errc::kInvalidArgument, std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace gpw
