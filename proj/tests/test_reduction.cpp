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

#include <functional>

#include "gpw/arith.hpp"
#include "gpw/classify.hpp"
#include "gpw/error.hpp"
#include "gpw/ff.hpp"
#include "gpw/gpgraph.hpp"
#include "gpw/reduction.hpp"
#include "oracles.hpp"

namespace gpw {
namespace {

using u64 = std::uint64_t;

TEST(MainConditions, Examples) {
  EXPECT_TRUE(check_main_conditions(7, 1, 3, BigInt(3)));
  EXPECT_FALSE(check_main_conditions(5, 1, 2, BigInt(2)));
  EXPECT_TRUE(check_main_conditions(7, 1, 1, BigInt(3)));
  EXPECT_TRUE(check_main_conditions(2, 4, 5, BigInt(5)));
}

TEST(SpecializedCheckers, Examples) {
  EXPECT_TRUE(check_b_prime(7, 1, 3, BigInt(3)));
  EXPECT_FALSE(check_b_prime(7, 1, 2, BigInt(3)));
  EXPECT_TRUE(check_b_prime(3, 2, 2, BigInt(8)));

  EXPECT_TRUE(check_b_pow2(5, 1, 2, BigInt(4)));
  for (u64 c : {1, 2, 3, 6}) EXPECT_FALSE(check_b_pow2(7, 1, 2, BigInt(c)));
  EXPECT_TRUE(check_b_pow2(7, 2, 2, BigInt(16)));

  EXPECT_TRUE(check_b_prime_power(2, 4, 5, 2, BigInt(15)));
  EXPECT_FALSE(check_b_prime_power(2, 1, 3, 2, BigInt(1)));
  EXPECT_TRUE(check_b_prime_power(7, 2, 3, 2, BigInt(48)));

  EXPECT_TRUE(check_general_b(2, 4, 15, BigInt(15)));
  EXPECT_TRUE(check_general_b(7, 2, 12, BigInt(48)));
  EXPECT_FALSE(check_general_b(2, 1, 9, BigInt(1)));

  for (u64 p : {7, 11, 13}) {
    EXPECT_TRUE(check_rad_phi(p, 8, 225, ipow(BigInt(p), 8) - 1));
    EXPECT_TRUE(check_rad_phi(p, 8, 15, ipow(BigInt(p), 8) - 1));
    EXPECT_FALSE(check_rad_phi(p, 4, 15, ipow(BigInt(p), 4) - 1));
  }
}

TEST(Rules, NamesRoundTrip) {
  for (Rule r : {Rule::kMainTheorem, Rule::kBPrime, Rule::kBPowerOf2, Rule::kBPrimePower,
                 Rule::kGeneralB, Rule::kRadPhiCorollary}) {
    EXPECT_EQ(parse_rule(to_string(r)), r);
    EXPECT_FALSE(citation(r).empty());
  }
  EXPECT_THROW(parse_rule("NoSuchRule"), Error);
}

// Every (p, a, b, c) with p <= 13, c | p^a - 1, p^(ab) <= 2^18.
void for_each_parameter_set(const std::function<void(u64, u64, u64, u64)>& fn) {
  for (u64 p : {2, 3, 5, 7, 11, 13}) {
    for (u64 a = 1; oracle::ipow(p, a) <= (1u << 18); ++a) {
      for (u64 c : oracle::divisors(oracle::ipow(p, a) - 1)) {
        for (u64 b = 1; oracle::ipow(p, a * b) <= (1u << 18); ++b) fn(p, a, b, c);
      }
    }
  }
}

TEST(MainConditions, MatchesPrimitiveDivisorDefinition) {
  for_each_parameter_set([](u64 p, u64 a, u64 b, u64 c) {
    ASSERT_EQ(check_main_conditions(p, a, b, BigInt(c)), oracle::main_conditions(p, a, b, c))
        << p << " " << a << " " << b << " " << c;
  });
}

TEST(MainConditions, PsiFormAgrees) {
  for_each_parameter_set([](u64 p, u64 a, u64 b, u64 c) {
    ASSERT_EQ(check_main_conditions_psi(p, a, b, BigInt(c)),
              check_main_conditions(p, a, b, BigInt(c)))
        << p << " " << a << " " << b << " " << c;
  });
}

TEST(SpecializedCheckers, BPrimeIsEquivalentToMain) {
  for_each_parameter_set([](u64 p, u64 a, u64 b, u64 c) {
    if (!oracle::is_prime(b)) return;
    ASSERT_EQ(check_b_prime(p, a, b, BigInt(c)), check_main_conditions(p, a, b, BigInt(c)))
        << p << " " << a << " " << b << " " << c;
  });
}

TEST(SpecializedCheckers, ImplyMain) {
  for_each_parameter_set([](u64 p, u64 a, u64 b, u64 c) {
    if (b < 2) return;
    const BigInt cb(c);
    const bool main = check_main_conditions(p, a, b, cb);
    for (Rule r : {Rule::kBPrime, Rule::kBPowerOf2, Rule::kBPrimePower, Rule::kGeneralB,
                   Rule::kRadPhiCorollary}) {
      if (check_rule(r, p, a, b, cb)) {
        ASSERT_TRUE(main) << to_string(r) << " " << p << " " << a << " " << b << " " << c;
      }
    }
    if (main) {
      ASSERT_TRUE(check_rule(classify_rule(p, a, b, cb), p, a, b, cb));
    }
  });
}

TEST(SpecializedCheckers, RejectOutsideTheirShape) {
  EXPECT_FALSE(check_b_prime(7, 1, 4, BigInt(3)));
  EXPECT_FALSE(check_b_prime_power(7, 1, 3, 2, BigInt(2)));  // 3 | u
}

TEST(Decompositions, Examples) {
  EXPECT_EQ(enumerate_decompositions(BigInt(2), 3, 2),
            (std::vector<Decomposition>{{1, 2, BigInt(2), BigInt(1)}}));
  EXPECT_EQ(enumerate_decompositions(BigInt(19), 7, 3),
            (std::vector<Decomposition>{{1, 3, BigInt(6), BigInt(1)}}));
  EXPECT_TRUE(enumerate_decompositions(BigInt(2), 7, 1).empty());
  EXPECT_THROW(enumerate_decompositions(BigInt(5), 7, 1), Error);
}

TEST(Decompositions, SmallestBaseFieldFirstAndKIdentity) {
  for (auto [p, m] : oracle::prime_powers_up_to(1 << 16)) {
    if (m == 1) continue;
    const u64 q = oracle::ipow(p, m);
    for (u64 k : oracle::divisors(q - 1)) {
      const auto decs = enumerate_decompositions(BigInt(k), p, m);
      for (std::size_t i = 0; i < decs.size(); ++i) {
        const Decomposition& d = decs[i];
        if (i > 0) {
          ASSERT_LT(decs[i - 1].a, d.a);
        }
        ASSERT_EQ(d.a * d.b, m);
        // (u / b) * Psi_b(p^a) = k
        const BigInt psi = (ipow(BigInt(p), m) - 1) / (ipow(BigInt(p), d.a) - 1);
        ASSERT_EQ(d.u * psi, BigInt(k) * d.b);
        ASSERT_TRUE(oracle::main_conditions(p, d.a, d.b, static_cast<u64>(d.c)));
      }
    }
  }
}

TEST(Reduce, DirectedCube) {
  const Certificate cert = reduce(BigInt(38), 7, 3);
  ASSERT_EQ(cert.steps.size(), 1u);
  const ReductionStep& s = cert.steps[0];
  EXPECT_EQ(s.a, 1u);
  EXPECT_EQ(s.b, 3u);
  EXPECT_EQ(s.c, 3);
  EXPECT_EQ(s.u, 2);
  EXPECT_EQ(s.rule, Rule::kBPrime);
  EXPECT_EQ(cert.base_k, 2);
  EXPECT_EQ(cert.base_a, 1u);
  EXPECT_EQ(cert.source, BaseSource::kSmallBound);
  EXPECT_EQ(cert.base_value, BigInt(2));
  EXPECT_EQ(cert.value, BigInt(6));
  EXPECT_TRUE(replay(cert).ok);
}

TEST(Reduce, Trivial) {
  const Certificate cert = reduce(BigInt(1), 13, 5);
  EXPECT_TRUE(cert.steps.empty());
  EXPECT_EQ(cert.source, BaseSource::kTrivial);
  EXPECT_EQ(cert.value, BigInt(1));
}

TEST(Reduce, LargeBinaryExample) {
  const Certificate cert = reduce(BigInt(41943), 2, 20);
  ASSERT_TRUE(cert.value);
  EXPECT_EQ(*cert.value, 10);
  EXPECT_EQ(cert.base_k, 3);
  EXPECT_EQ(cert.base_a, 4u);
  EXPECT_EQ(cert.base_value, BigInt(2));
  EXPECT_TRUE(replay(cert).ok) << replay(cert).message;
}

TEST(Reduce, AstronomicalField) {
  const BigInt q = ipow(BigInt(47), 23);
  const Certificate cert = reduce((q - 1) / 529, 47, 23);
  ASSERT_TRUE(cert.value);
  EXPECT_EQ(*cert.value, 46);
  ASSERT_EQ(cert.steps.size(), 1u);
  EXPECT_EQ(cert.steps[0].b, 23u);
  EXPECT_TRUE(replay(cert).ok) << replay(cert).message;
}

TEST(Reduce, Errors) {
  EXPECT_THROW(reduce(BigInt(2), 9, 2), Error);
  EXPECT_THROW(reduce(BigInt(5), 7, 1), Error);
  try {
    reduce(BigInt(6), 5, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNonExistent);
  }
}

TEST(Reduce, UnresolvedIsReported) {
  // A large prime field outside every catalog family and the budget.
  const u64 p = 1000003;
  const Certificate cert = reduce(BigInt(166667), p, 1, 1 << 10);
  EXPECT_FALSE(cert.resolved());
  EXPECT_EQ(cert.source, BaseSource::kUnresolved);
  EXPECT_TRUE(replay(cert).ok);
}

TEST(Replay, TamperingIsDetected) {
  const Certificate good = reduce(BigInt(38), 7, 3);
  ASSERT_TRUE(replay(good).ok);
  std::vector<std::function<void(Certificate&)>> tampers = {
      [](Certificate& c) { c.k = 19; },
      [](Certificate& c) { c.p = 5; },
      [](Certificate& c) { c.m = 4; },
      [](Certificate& c) { c.steps[0].b = 2; },
      [](Certificate& c) { c.steps[0].c = 6; },
      [](Certificate& c) { c.steps[0].u = 1; },
      [](Certificate& c) { c.steps[0].a = 2; },
      [](Certificate& c) { c.steps[0].rule = Rule::kBPowerOf2; },
      [](Certificate& c) { c.steps[0].citation = "trust me"; },
      [](Certificate& c) { c.base_k = 1; },
      [](Certificate& c) { c.base_value = BigInt(3); },
      [](Certificate& c) { c.value = BigInt(7); },
      [](Certificate& c) { c.source = BaseSource::kSemiprimitive; },
      [](Certificate& c) { c.steps.clear(); },
  };
  for (std::size_t i = 0; i < tampers.size(); ++i) {
    Certificate bad = good;
    tampers[i](bad);
    EXPECT_FALSE(replay(bad).ok) << "tamper " << i;
  }
}

TEST(Replay, CertificatesAgreeWithBfs) {
  for (auto [p, m] : oracle::prime_powers_up_to(8000)) {
    const u64 q = oracle::ipow(p, m);
    FieldPtr f;
    for (u64 k : oracle::divisors(q - 1)) {
      if (!waring_exists(BigInt(k), p, m)) continue;
      const Certificate cert = reduce(BigInt(k), p, m);
      ASSERT_TRUE(cert.value);
      ASSERT_TRUE(replay(cert).ok) << replay(cert).message;
      if (!f) f = build_field(p, m);
      ASSERT_EQ(BigInt(*waring_bfs(GPGraph(f, k)).value), *cert.value)
          << k << " " << p << "^" << m;
    }
  }
}

TEST(ClosedForms, Kononen1) {
  auto check = [](ClosedForm cf, u64 k, u64 q, u64 v) {
    EXPECT_EQ(cf.k, k);
    EXPECT_EQ(cf.q, q);
    EXPECT_EQ(cf.value, v);
  };
  check(kononen1(3, 2, 2), 2, 9, 2);
  check(kononen1(2, 3, 2), 7, 64, 3);
  check(kononen1(5, 3, 1), 8, 25, 4);
  EXPECT_THROW(kononen1(3, 2, 3), Error);  // no primitive roots mod 8
  EXPECT_THROW(kononen1(7, 3, 1), Error);  // 7 = 1 mod 3
}

TEST(ClosedForms, Kononen2) {
  const ClosedForm a = kononen2(5, 3, 1);
  EXPECT_EQ(a.k, 4);
  EXPECT_EQ(a.q, 25);
  EXPECT_EQ(a.value, 3);
  const ClosedForm b = kononen2(3, 5, 1);
  EXPECT_EQ(b.k, 8);
  EXPECT_EQ(b.q, 81);
  EXPECT_EQ(b.value, 3);
  try {
    kononen2(7, 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotPrimitiveRoot);
  }
}

TEST(ClosedForms, Hamming) {
  const ClosedForm a = hamming_value(7, 1, 3);
  EXPECT_EQ(a.k, 19);
  EXPECT_EQ(a.q, 343);
  EXPECT_EQ(a.value, 3);
  const ClosedForm b = hamming_value(2, 2, 3);
  EXPECT_EQ(b.k, 7);
  EXPECT_EQ(b.q, 64);
  EXPECT_EQ(b.value, 3);
  EXPECT_THROW(hamming_value(4, 1, 3), Error);
}

TEST(ClosedForms, KononenAgreesWithBfs) {
  for (u64 p : {2, 3, 5, 7, 11, 13}) {
    for (u64 r : {2, 3, 5, 7}) {
      for (unsigned e = 1; e <= 2; ++e) {
        for (int form : {1, 2}) {
          ClosedForm cf;
          try {
            cf = form == 1 ? kononen1(p, r, e) : kononen2(p, r, e);
          } catch (const Error&) {
            continue;
          }
          if (cf.q > 1 << 18) continue;
          const u64 q = static_cast<u64>(cf.q);
          unsigned m = 0;
          for (u64 x = 1; x < q; x *= p) ++m;
          EXPECT_EQ(BigInt(*waring_bfs(GPGraph(build_field(p, m), static_cast<u64>(cf.k)),
                                       1 << 18)
                                .value),
                    cf.value)
              << "form " << form << " p=" << p << " r=" << r << " e=" << e;
        }
      }
    }
  }
}

}  // namespace
}  // namespace gpw
