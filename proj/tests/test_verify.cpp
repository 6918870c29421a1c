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

#include "gpw/error.hpp"
#include "gpw/verify.hpp"

namespace gpw {
namespace {

class SmallSuite : public ::testing::TestWithParam<std::string> {};

TEST_P(SmallSuite, PassesWithEveryCheckExercised) {
  VerifyOptions options;
  options.max_q = 4096;
  const SuiteReport r = run_suite(GetParam(), options);
  EXPECT_EQ(r.suite, GetParam());
  ASSERT_FALSE(r.checks.empty());
  for (const CheckResult& c : r.checks) {
    EXPECT_GT(c.checked, 0u) << c.name;
    EXPECT_EQ(c.violations, 0u) << c.name << ": "
                                << (c.failures.empty() ? "" : c.failures.front());
  }
  EXPECT_TRUE(r.passed());
}

INSTANTIATE_TEST_SUITE_P(AllSuites, SmallSuite, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) { return info.param; });

TEST(Verify, SuiteNames) {
  EXPECT_EQ(suite_names(), (std::vector<std::string>{"reduction", "psi", "decomposition",
                                                     "existence", "semiprimitive",
                                                     "kononen", "catalog"}));
  EXPECT_EQ(default_max_q("reduction"), 1u << 18);
  EXPECT_EQ(default_max_q("existence"), 5000u);
}

TEST(Verify, Errors) {
  EXPECT_THROW(run_suite("nonsense", {}), Error);
  VerifyOptions options;
  options.max_q = 1 << 21;
  try {
    run_suite("reduction", options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInvalidArgument);
  }
}

TEST(Verify, KononenReportsDisputedValue) {
  VerifyOptions options;
  options.max_q = 256;
  const SuiteReport r = verify_kononen(options);
  const CheckResult* req = r.find("required-instances");
  ASSERT_NE(req, nullptr);
  EXPECT_EQ(req->checked, 5u);
  EXPECT_TRUE(req->passed());
  bool noted = false;
  for (const std::string& n : r.notes) noted |= n.find("g(8, 81): BFS 3") != std::string::npos;
  EXPECT_TRUE(noted);
}

TEST(Verify, JsonReport) {
  VerifyOptions options;
  options.max_q = 1000;
  const nlohmann::json j = to_json(verify_existence(options));
  EXPECT_EQ(j["suite"], "existence");
  EXPECT_EQ(j["max_q"], 1000);
  EXPECT_EQ(j["passed"], true);
  ASSERT_TRUE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c.contains("checked"));
    EXPECT_EQ(c["violations"], 0);
  }
}

TEST(Verify, SingleThreadMatchesDefault) {
  VerifyOptions one;
  one.max_q = 2048;
  one.threads = 1;
  VerifyOptions many = one;
  many.threads = 4;
  const SuiteReport a = verify_reduction(one);
  const SuiteReport b = verify_reduction(many);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].checked, b.checks[i].checked);
    EXPECT_EQ(a.checks[i].violations, b.checks[i].violations);
  }
}

}  // namespace
}  // namespace gpw
