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

#include <random>

#include "gpw/arith.hpp"
#include "gpw/error.hpp"
#include "gpw/ff.hpp"
#include "oracles.hpp"

namespace gpw {
namespace {

oracle::NaiveField naive_copy(const FieldTable& f) {
  std::vector<std::uint64_t> low(f.spec().modulus.begin(), f.spec().modulus.end());
  return oracle::NaiveField(f.p(), f.m(), low);
}

TEST(BuildField, SmallExamples) {
  const FieldPtr f9 = build_field(3, 2);
  EXPECT_EQ(f9->q(), 9u);
  EXPECT_EQ(f9->exp_table().size(), 8u);
  EXPECT_EQ(f9->log_table().size(), 9u);

  const FieldPtr f2 = build_field(2, 1);
  EXPECT_EQ(f2->q(), 2u);
  ASSERT_EQ(f2->exp_table().size(), 1u);
  EXPECT_EQ(f2->exp_table()[0], 1u);
  EXPECT_EQ(f2->omega(), 1u);
}

TEST(BuildField, GeneratorHasFullOrder) {
  const FieldPtr f = build_field(7, 3);
  ASSERT_EQ(f->q(), 343u);
  const oracle::NaiveField nf = naive_copy(*f);
  EXPECT_EQ(nf.pow(f->omega(), 342), 1u);
  for (std::uint64_t d : oracle::divisors(342)) {
    if (d < 342) {
      EXPECT_NE(nf.pow(f->omega(), d), 1u) << d;
    }
  }
}

TEST(BuildField, Errors) {
  try {
    build_field(9, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInvalidPrime);
  }
  try {
    build_field(2, 30, std::uint64_t{1} << 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kBudgetExceeded);
  }
}

TEST(BuildField, ModulusIsSmallestIrreducible) {
  for (auto [p, m] : oracle::prime_powers_up_to(3000)) {
    const FieldPtr f = build_field(p, m);
    const oracle::NaiveField expected = oracle::NaiveField::smallest(p, m);
    std::vector<std::uint64_t> low(f->spec().modulus.begin(), f->spec().modulus.end());
    ASSERT_TRUE(oracle::NaiveField::irreducible(p, low)) << p << "^" << m;
    // Same modulus means same multiplication.
    for (std::uint64_t x = 0; x < std::min<std::uint64_t>(f->q(), 40); ++x) {
      ASSERT_EQ(elem_mul(*f, x, f->omega()), expected.mul(x, f->omega()));
    }
  }
}

TEST(BuildField, OmegaIsSmallestGenerator) {
  for (auto [p, m] : oracle::prime_powers_up_to(2000)) {
    const FieldPtr f = build_field(p, m);
    const oracle::NaiveField nf = naive_copy(*f);
    const std::uint64_t q = f->q();
    auto is_generator = [&](std::uint64_t g) {
      for (auto [r, e] : oracle::factor(q - 1)) {
        if (nf.pow(g, (q - 1) / r) == 1) return false;
      }
      return true;
    };
    for (std::uint64_t g = 1; g < f->omega(); ++g) ASSERT_FALSE(is_generator(g));
    ASSERT_TRUE(is_generator(f->omega()));
  }
}

TEST(FieldTable, ArithmeticMatchesNaivePolynomials) {
  for (auto [p, m] : oracle::prime_powers_up_to(343)) {
    const FieldPtr f = build_field(p, m);
    const oracle::NaiveField nf = naive_copy(*f);
    for (std::uint32_t x = 0; x < f->q(); ++x) {
      for (std::uint32_t y = 0; y < f->q(); ++y) {
        ASSERT_EQ(elem_add(*f, x, y), nf.add(x, y)) << p << "^" << m;
        ASSERT_EQ(elem_mul(*f, x, y), nf.mul(x, y)) << p << "^" << m;
      }
    }
  }
}

TEST(FieldTable, SampledArithmeticOnLargerFields) {
  // Multi-chunk tables (3^10), digit-wise addition (257^2) and binary fields.
  std::mt19937_64 rng(7);
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {3, 10}, {257, 2}, {2, 16}, {5, 7}, {7, 6}, {65521, 1}}) {
    const FieldPtr f = build_field(p, m);
    const oracle::NaiveField nf = naive_copy(*f);
    std::uniform_int_distribution<std::uint32_t> pick(0, f->q() - 1);
    for (int i = 0; i < 20000; ++i) {
      const std::uint32_t x = pick(rng), y = pick(rng);
      ASSERT_EQ(elem_add(*f, x, y), nf.add(x, y)) << p << "^" << m;
      ASSERT_EQ(elem_mul(*f, x, y), nf.mul(x, y)) << p << "^" << m;
      ASSERT_EQ(f->add_split(f->split(x), f->split(y)), nf.add(x, y)) << p << "^" << m;
      ASSERT_EQ(f->add(x, f->neg(x)), 0u);
      ASSERT_EQ(f->sub(f->add(x, y), y), x);
    }
  }
}

TEST(FieldTable, Examples) {
  for (auto [p, m] : oracle::prime_powers_up_to(128)) {
    const FieldPtr f = build_field(p, m);
    const std::uint32_t omega = f->omega();
    EXPECT_EQ(elem_mul(*f, omega, f->exp(f->q() - 2)), 1u);
    for (std::uint32_t x = 0; x < f->q(); ++x) {
      EXPECT_EQ(elem_mul(*f, 0, x), 0u);
      if (p == 2) {
        EXPECT_EQ(elem_add(*f, x, x), 0u);
      }
      if (x) {
        EXPECT_EQ(elem_mul(*f, x, f->inv(x)), 1u);
        EXPECT_EQ(f->exp(f->log(x)), x);
      }
    }
  }
}

TEST(FieldTable, ExpLogTablesAreInverse) {
  for (auto [p, m] : oracle::prime_powers_up_to(5000)) {
    const FieldPtr f = build_field(p, m);
    const std::uint32_t q = f->q();
    std::vector<char> seen(q, 0);
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      const std::uint32_t x = f->exp(i);
      ASSERT_TRUE(x > 0 && x < q && !seen[x]);
      seen[x] = 1;
      ASSERT_EQ(f->log(x), i);
    }
  }
}

TEST(FieldTable, Frobenius) {
  for (auto [p, m] : oracle::prime_powers_up_to(125)) {
    const FieldPtr f = build_field(p, m);
    for (std::uint32_t x = 0; x < f->q(); ++x) {
      for (std::uint32_t y = 0; y < f->q(); ++y) {
        ASSERT_EQ(f->pow(f->add(x, y), p), f->add(f->pow(x, p), f->pow(y, p)));
      }
    }
  }
}

TEST(FieldTable, DigitsRoundTrip) {
  const FieldPtr f = build_field(5, 4);
  for (std::uint32_t x = 0; x < f->q(); ++x) {
    const auto d = f->digits(x);
    ASSERT_EQ(d.size(), 4u);
    for (unsigned i = 0; i < 4; ++i) ASSERT_EQ(f->digit(x, i), d[i]);
    ASSERT_EQ(f->from_digits(d), x);
  }
}

TEST(PowerResidues, Examples) {
  const FieldPtr f9 = build_field(3, 2);
  EXPECT_EQ(power_residues(*f9, 1).size(), 8u);
  const ResidueSet r2 = power_residues(*f9, 2);
  EXPECT_EQ(r2.size(), 4u);
  for (std::uint32_t x : r2.members) {
    for (std::uint32_t y : r2.members) EXPECT_TRUE(r2.contains(elem_mul(*f9, x, y)));
  }
  EXPECT_EQ(power_residues(*build_field(7, 3), 19).size(), 18u);
  try {
    power_residues(*f9, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotNormalized);
  }
}

TEST(PowerResidues, SubgroupAndSymmetry) {
  for (auto [p, m] : oracle::prime_powers_up_to(1000)) {
    const FieldPtr f = build_field(p, m);
    const std::uint64_t q = f->q();
    for (std::uint64_t k : oracle::divisors(q - 1)) {
      const ResidueSet r = power_residues(*f, k);
      ASSERT_EQ(r.size(), (q - 1) / k);
      ASSERT_TRUE(std::is_sorted(r.members.begin(), r.members.end()));
      ASSERT_TRUE(r.contains(1));
      ASSERT_FALSE(r.contains(0));
      const std::uint32_t step = r.members.size() > 1 ? r.members[1] : 1;
      bool symmetric = true;
      for (std::uint32_t x : r.members) {
        ASSERT_TRUE(r.contains(elem_mul(*f, x, step)));
        symmetric = symmetric && r.contains(f->neg(x));
      }
      ASSERT_EQ(symmetric, q % 2 == 0 || ((q - 1) / 2) % k == 0) << k << " " << q;
    }
  }
}

TEST(PowerResidues, MatchesNaivePowers) {
  for (auto [p, m] : oracle::prime_powers_up_to(300)) {
    const FieldPtr f = build_field(p, m);
    const oracle::NaiveField nf = naive_copy(*f);
    for (std::uint64_t k : oracle::divisors(f->q() - 1)) {
      const std::set<std::uint64_t> expected = nf.kth_powers(k);
      const ResidueSet r = power_residues(*f, k);
      ASSERT_EQ(std::vector<std::uint64_t>(r.members.begin(), r.members.end()),
                std::vector<std::uint64_t>(expected.begin(), expected.end()));
    }
  }
}

}  // namespace
}  // namespace gpw
