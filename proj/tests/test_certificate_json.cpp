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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "gpw/certificate_json.hpp"
#include "gpw/error.hpp"
#include "gpw/reduction.hpp"

namespace gpw {
namespace {

using nlohmann::json;

TEST(CertificateJson, Shape) {
  const json j = to_json(reduce(BigInt(38), 7, 3));
  EXPECT_EQ(j["target"], (json{{"p", 7}, {"m", 3}, {"k", "38"}}));
  ASSERT_EQ(j["steps"].size(), 1u);
  const json& s = j["steps"][0];
  EXPECT_EQ(s["rule"], "BPrime");
  EXPECT_EQ(s["p"], 7);
  EXPECT_EQ(s["a"], 1);
  EXPECT_EQ(s["b"], 3);
  EXPECT_EQ(s["c"], "3");
  EXPECT_EQ(s["u"], "2");
  EXPECT_TRUE(s["citation"].is_string());
  EXPECT_EQ(j["base"], (json{{"k", "2"}, {"p", 7}, {"a", 1}, {"source", "SmallBound"}}));
  EXPECT_EQ(j["value"], "6");
}

TEST(CertificateJson, UnresolvedValueIsNull) {
  const json j = to_json(reduce(BigInt(166667), 1000003, 1, 1 << 10));
  EXPECT_TRUE(j["value"].is_null());
  EXPECT_EQ(j["base"]["source"], "Unresolved");
}

TEST(CertificateJson, RoundTrip) {
  const std::vector<Certificate> certs = {
      reduce(BigInt(38), 7, 3),
      reduce(BigInt(1), 5, 2),
      reduce(BigInt(41943), 2, 20),
      reduce((ipow(BigInt(47), 23) - 1) / 529, 47, 23),
      reduce(BigInt(163), 41, 81),
      reduce(BigInt(8), 3, 4),
      reduce(BigInt(166667), 1000003, 1, 1 << 10),
  };
  for (const Certificate& c : certs) {
    const json j = to_json(c);
    const Certificate back = certificate_from_json(json::parse(j.dump()));
    EXPECT_EQ(back, c) << j.dump();
    EXPECT_EQ(to_json(back), j);
    EXPECT_TRUE(replay(back).ok);
  }
}

TEST(CertificateJson, MalformedInputIsRejected) {
  const json good = to_json(reduce(BigInt(38), 7, 3));
  std::vector<json> bad;
  bad.push_back(json::array());
  bad.push_back(json{{"target", good["target"]}});
  {
    json j = good;
    j["target"]["k"] = 38;  // numbers travel as strings
    bad.push_back(j);
  }
  {
    json j = good;
    j["steps"][0]["rule"] = "NoSuchRule";
    bad.push_back(j);
  }
  {
    json j = good;
    j["base"]["source"] = "Oracle";
    bad.push_back(j);
  }
  {
    json j = good;
    j["value"] = "six";
    bad.push_back(j);
  }
  {
    json j = good;
    j["value"] = "7";  // not a multiple of the step product
    bad.push_back(j);
  }
  {
    json j = good;
    j["steps"][0]["b"] = -3;
    bad.push_back(j);
  }
  for (const json& j : bad) {
    try {
      certificate_from_json(j);
      ADD_FAILURE() << "accepted " << j.dump();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kInvalidArgument) << j.dump();
    }
  }
}

}  // namespace
}  // namespace gpw
