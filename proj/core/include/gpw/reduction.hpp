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

#ifndef GPW_REDUCTION_HPP_
#define GPW_REDUCTION_HPP_

// Reduction formulas g((p^ab - 1)/(bc), p^ab) = b g((p^a - 1)/c, p^a), their
// condition checkers, and replayable derivation certificates.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpw/arith.hpp"
#include "gpw/classify.hpp"

namespace gpw {

enum class Rule {
  kMainTheorem,
  kBPrime,
  kBPowerOf2,
  kBPrimePower,
  kGeneralB,
  kRadPhiCorollary,
};

std::string to_string(Rule rule);
/// Throws kInvalidArgument for unknown names.
Rule parse_rule(const std::string& name);
std::string citation(Rule rule);

/// True iff c is a primitive divisor of p^a - 1 and bc one of p^ab - 1.
bool check_main_conditions(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                           const BigInt& c);
/// Same condition through divisibility of u Psi_l(p^a) by b, l <= b.
bool check_main_conditions_psi(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                               const BigInt& c);

// The specialized checkers return false when their own preconditions fail
// (b not prime, c not a primitive divisor of p^a - 1, ...).

/// b prime: b | p^a - 1 and b does not divide u.
bool check_b_prime(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                   const BigInt& c);
/// b = 2^t, t >= 2, p odd: p^a = 1 (mod 4) and u odd.
bool check_b_pow2(std::uint64_t p, std::uint64_t a, unsigned t, const BigInt& c);
/// b = r^t, r odd prime, t >= 2, gcd(u, r) = 1: ord_{r^t}(p^a) = r^h, h < t.
bool check_b_prime_power(std::uint64_t p, std::uint64_t a, std::uint64_t r,
                         unsigned t, const BigInt& c);
/// b not a power of 2, gcd(p, b) = gcd(u, b) = 1: the order condition for
/// every odd prime power exactly dividing b, and p^a = 1 (mod 4) when 4 | b.
bool check_general_b(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                     const BigInt& c);
/// b > 1 not a power of 2, p does not divide b: phi(rad b) | a and
/// gcd(u, b) = 1.
bool check_rad_phi(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                   const BigInt& c);

/// Whether the rule-specific checker accepts (p, a, b, c).
bool check_rule(Rule rule, std::uint64_t p, std::uint64_t a, std::uint64_t b,
                const BigInt& c);
/// Most specific rule whose checker accepts; kMainTheorem otherwise.
Rule classify_rule(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                   const BigInt& c);

struct Decomposition {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  BigInt c;
  BigInt u;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// All (a, b, c, u) with b | m, b | n, b > 1, c = n / b > 1 and the main
/// conditions holding, sorted by ascending a. k must divide p^m - 1.
std::vector<Decomposition> enumerate_decompositions(const BigInt& k,
                                                    std::uint64_t p, unsigned m);

struct ReductionStep {
  Rule rule = Rule::kMainTheorem;
  std::uint64_t p = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  BigInt c;
  BigInt u;
  std::string citation;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct Certificate {
  // target g(k, p^m)
  BigInt k;
  std::uint64_t p = 0;
  unsigned m = 0;
  std::vector<ReductionStep> steps;
  // base g(base_k, p^base_a)
  BigInt base_k;
  unsigned base_a = 0;
  BaseSource source = BaseSource::kUnresolved;
  std::string catalog_id;  // set for kCatalogEntry
  std::optional<BigInt> base_value;
  std::optional<BigInt> value;

  bool resolved() const { return value.has_value(); }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Name used in serialized certificates, e.g. "Kononen1" or
/// "CatalogEntry(p-minus-1)".
std::string source_name(const Certificate& cert);

/// Follows the first decomposition until none applies, then resolves the
/// base through k = 1, known_value, or BFS when p^a <= budget. Otherwise the
/// certificate is returned unresolved. Throws kNonExistent when g(k, p^m)
/// does not exist and kNotNormalized when k does not divide p^m - 1.
Certificate reduce(const BigInt& k, std::uint64_t p, unsigned m,
                   std::uint64_t budget = std::uint64_t{1} << 20);

struct ReplayResult {
  bool ok = false;
  std::string message;
};

/// Re-checks every step and the base. BFS bases are recomputed when p^a is
/// within budget and rejected otherwise.
ReplayResult replay(const Certificate& cert,
                    std::uint64_t budget = std::uint64_t{1} << 22);

struct ClosedForm {
  BigInt k;
  BigInt q;
  BigInt value;
};

/// g((p^phi(r^e) - 1)/r^e, p^phi(r^e)) = (p - 1) phi(r^e) / 2. For r = 2
/// only e <= 2 is accepted. Throws kNotPrimitiveRoot or kInvalidArgument.
ClosedForm kononen1(std::uint64_t p, std::uint64_t r, unsigned e);
/// g((p^phi(r^e) - 1)/(2 r^e), p^phi(r^e)) for odd distinct p, r.
ClosedForm kononen2(std::uint64_t p, std::uint64_t r, unsigned e);
/// g((p^ab - 1)/(b (p^a - 1)), p^ab) = b for b prime, b != p, b | p^a - 1.
/// Throws kPreconditionFailed.
ClosedForm hamming_value(std::uint64_t p, std::uint64_t a, std::uint64_t b);

}  // namespace gpw

#endif  // GPW_REDUCTION_HPP_
