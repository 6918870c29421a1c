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

#ifndef GPW_ARITH_HPP_
#define GPW_ARITH_HPP_

// Exact integer number theory shared by every other module. All entry points
// take arbitrary-precision integers; values such as 41^81 appear routinely.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gpw {

using BigInt = boost::multiprecision::cpp_int;

struct PrimeFactor {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Prime factorization, primes strictly increasing. Empty for 1.
struct Factorization {
  std::vector<PrimeFactor> factors;

  BigInt product() const;
  bool empty() const { return factors.empty(); }
  std::size_t size() const { return factors.size(); }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// q = p^m with p prime.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned m = 0;
  BigInt q;

  PrimePower(std::uint64_t prime, unsigned exponent);
};

BigInt ipow(const BigInt& base, std::uint64_t exponent);
BigInt powm(const BigInt& base, const BigInt& exponent, const BigInt& modulus);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Probabilistic for inputs beyond 64 bits, deterministic below.
bool is_prime(const BigInt& n);
bool is_prime(std::uint64_t n);

/// Trial division by primes up to 10^7, then Pollard-Brent rho on cofactors.
/// Precondition n >= 1 (n = 0 is a contract violation and throws).
Factorization factorize(const BigInt& n);

/// Sorted list of positive divisors. Intended for moderately sized n.
std::vector<BigInt> divisors(const BigInt& n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

BigInt euler_phi(const BigInt& n);
BigInt radical(const BigInt& n);

/// Smallest e >= 1 with a^e = 1 (mod n). Computed by stripping prime
/// factors from phi(n). Throws Errc::kNotCoprime when gcd(a, n) != 1.
BigInt mult_order(const BigInt& a, const BigInt& n);

/// Largest e with r^e | n (r >= 2, n >= 1).
unsigned valuation(const BigInt& r, const BigInt& n);

/// True iff e | p^a - 1 and e does not divide p^t - 1 for any 1 <= t < a.
/// By convention e = 1 is primitive only for a = 1.
bool is_primitive_divisor(const BigInt& e, const BigInt& p, std::uint64_t a);

/// (x^t - 1)/(x - 1) = x^(t-1) + ... + x + 1 reduced mod n, by Horner.
BigInt psi_mod(std::uint64_t t, const BigInt& x, const BigInt& n);

/// Whether Psi_ab(beta) = Psi_b(beta^a) * Psi_a(beta) (mod n).
bool psi_factor_identity_check(std::uint64_t a, std::uint64_t b,
                               const BigInt& beta, const BigInt& n);

/// Existence of g(k, p^m): (p^m-1)/(p^d-1) must not divide gcd(k, p^m-1)
/// for any proper divisor d of m.
bool waring_exists(const BigInt& k, std::uint64_t p, unsigned m);

/// gcd(k, q - 1).
BigInt normalize_k(const BigInt& k, const BigInt& q);

/// Decimal rendering, used by serializers and diagnostics.
std::string to_decimal(const BigInt& n);
/// Parses a non-negative decimal integer; throws Errc::kInvalidArgument.
BigInt parse_decimal(const std::string& text);

}  // namespace gpw

#endif  // GPW_ARITH_HPP_
