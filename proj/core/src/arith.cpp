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

#include "gpw/arith.hpp"

#include <algorithm>
#include <array>
#include <map>

#include <boost/multiprecision/miller_rabin.hpp>

#include "gpw/error.hpp"

namespace gpw {
namespace {

constexpr std::uint32_t kTrialDivisionLimit = 10'000'000;
constexpr std::uint32_t kSmallSieveLimit = 1 << 16;

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

std::vector<std::uint32_t> sieve(std::uint32_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = u64{i} * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = sieve(kSmallSieveLimit);
  return primes;
}

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = sieve(kTrialDivisionLimit);
  return primes;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod(u64 base, u64 e, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set for all n < 3.3e24.
  for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's variant; n must be an odd composite.
u64 pollard_brent_u64(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 batch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
      }
    }
    if (g == n) {
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

BigInt pollard_brent_big(const BigInt& n) {
  for (unsigned c = 1;; ++c) {
    BigInt y = 2, x = 2, g = 1, q = 1, ys = 2;
    const unsigned batch = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min<std::uint64_t>(batch, r - k); ++i) {
          y = (y * y + c) % n;
          q = (q * (x > y ? BigInt(x - y) : BigInt(y - x))) % n;
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(x > ys ? BigInt(x - ys) : BigInt(ys - x), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

bool fits_u64(const BigInt& n) {
  return n >= 0 && n <= BigInt(std::numeric_limits<u64>::max());
}

void split_composite(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d;
  if (fits_u64(n)) {
    d = pollard_brent_u64(static_cast<u64>(n));
  } else {
    d = pollard_brent_big(n);
  }
  split_composite(d, out);
  split_composite(n / d, out);
}

template <typename Int>
bool divide_out(Int& rest, std::uint32_t p, std::map<BigInt, unsigned>& out) {
  bool hit = false;
  while (rest % p == 0) {
    rest /= p;
    ++out[BigInt(p)];
    hit = true;
  }
  return hit;
}

}  // namespace

BigInt Factorization::product() const {
  BigInt value = 1;
  for (const auto& f : factors) value *= ipow(f.prime, f.exponent);
  return value;
}

PrimePower::PrimePower(std::uint64_t prime, unsigned exponent)
    : p(prime), m(exponent) {
  if (!is_prime(prime)) {
    throw Error(Errc::kInvalidPrime, std::to_string(prime) + " is not prime");
  }
  if (exponent == 0) {
    throw Error(Errc::kInvalidArgument, "exponent must be at least 1");
  }
  q = ipow(BigInt(prime), exponent);
}

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

BigInt powm(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
  if (modulus == 1) return 0;
  BigInt b = base % modulus;
  if (b < 0) b += modulus;
  return boost::multiprecision::powm(b, exponent, modulus);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

bool is_prime(std::uint64_t n) { return miller_rabin_u64(n); }

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return miller_rabin_u64(static_cast<u64>(n));
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return false;
  }
  return boost::multiprecision::miller_rabin_test(n, 32);
}

Factorization factorize(const BigInt& n) {
  if (n < 1) {
    throw Error(Errc::kInvalidArgument, "factorize requires n >= 1");
  }
  std::map<BigInt, unsigned> found;
  BigInt rest = n;

  auto trial = [&](const std::vector<std::uint32_t>& primes, std::size_t from,
                   std::uint32_t check_prime_after) -> std::size_t {
    std::size_t i = from;
    for (; i < primes.size(); ++i) {
      const std::uint32_t p = primes[i];
      if (rest == 1) break;
      if (fits_u64(rest)) {
        u64 r = static_cast<u64>(rest);
        if (u128{p} * p > r) break;
        if (divide_out(r, p, found)) rest = r;
      } else {
        divide_out(rest, p, found);
      }
      if (p == check_prime_after && rest > 1 && is_prime(rest)) {
        ++found[rest];
        rest = 1;
        break;
      }
    }
    return i;
  };

  const auto& small = small_primes();
  std::size_t next = trial(small, 0, 997);
  bool exhausted_small = next >= small.size();
  if (rest > 1 && exhausted_small) {
    const auto& big = trial_primes();
    trial(big, small.size(), 0);
  }
  if (rest > 1) split_composite(rest, found);

  Factorization result;
  for (auto& [prime, exponent] : found) result.factors.push_back({prime, exponent});
  return result;
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> out{1};
  for (const auto& f : factorize(n).factors) {
    const std::size_t current = out.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      power *= f.prime;
      for (std::size_t i = 0; i < current; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& d : divisors(BigInt(n))) out.push_back(static_cast<u64>(d));
  return out;
}

BigInt euler_phi(const BigInt& n) {
  BigInt phi = 1;
  for (const auto& f : factorize(n).factors) {
    phi *= ipow(f.prime, f.exponent - 1) * (f.prime - 1);
  }
  return phi;
}

BigInt radical(const BigInt& n) {
  BigInt rad = 1;
  for (const auto& f : factorize(n).factors) rad *= f.prime;
  return rad;
}

BigInt mult_order(const BigInt& a, const BigInt& n) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "mult_order requires n >= 1");
  if (n == 1) return 1;
  BigInt base = a % n;
  if (base < 0) base += n;
  if (gcd(base, n) != 1) {
    throw Error(Errc::kNotCoprime, "gcd(" + to_decimal(a) + ", " +
                                       to_decimal(n) + ") != 1");
  }
  std::map<BigInt, unsigned> phi_factors;
  BigInt order = 1;
  for (const auto& f : factorize(n).factors) {
    if (f.exponent > 1) phi_factors[f.prime] += f.exponent - 1;
    for (const auto& g : factorize(f.prime - 1).factors) {
      phi_factors[g.prime] += g.exponent;
    }
    order *= ipow(f.prime, f.exponent - 1) * (f.prime - 1);
  }
  for (const auto& [s, count] : phi_factors) {
    for (unsigned i = 0; i < count; ++i) {
      BigInt candidate = order / s;
      if (powm(base, candidate, n) != 1) break;
      order = candidate;
    }
  }
  return order;
}

unsigned valuation(const BigInt& r, const BigInt& n) {
  if (r < 2 || n < 1) {
    throw Error(Errc::kInvalidArgument, "valuation requires r >= 2, n >= 1");
  }
  unsigned e = 0;
  BigInt rest = n;
  while (rest % r == 0) {
    rest /= r;
    ++e;
  }
  return e;
}

bool is_primitive_divisor(const BigInt& e, const BigInt& p, std::uint64_t a) {
  if (e < 1 || a < 1) {
    throw Error(Errc::kInvalidArgument, "is_primitive_divisor requires e, a >= 1");
  }
  if (e == 1) return a == 1;
  if (powm(p, a, e) != 1) return false;
  for (const auto& f : factorize(BigInt(a)).factors) {
    if (powm(p, a / static_cast<u64>(f.prime), e) == 1) return false;
  }
  return true;
}

BigInt psi_mod(std::uint64_t t, const BigInt& x, const BigInt& n) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "psi_mod requires n >= 1");
  BigInt xr = x % n;
  if (xr < 0) xr += n;
  if (n <= BigInt(std::numeric_limits<u64>::max())) {
    const u64 mod = static_cast<u64>(n);
    const u64 base = static_cast<u64>(xr);
    u64 acc = 0;
    for (std::uint64_t i = 0; i < t; ++i) {
      acc = static_cast<u64>((u128{acc} * base + 1) % mod);
    }
    return BigInt(acc);
  }
  BigInt acc = 0;
  for (std::uint64_t i = 0; i < t; ++i) acc = (acc * xr + 1) % n;
  return acc;
}

bool psi_factor_identity_check(std::uint64_t a, std::uint64_t b,
                               const BigInt& beta, const BigInt& n) {
  const BigInt lhs = psi_mod(a * b, beta, n);
  const BigInt rhs =
      (psi_mod(b, powm(beta, a, n), n) * psi_mod(a, beta, n)) % n;
  return lhs == rhs;
}

bool waring_exists(const BigInt& k, std::uint64_t p, unsigned m) {
  if (k < 1 || m < 1) {
    throw Error(Errc::kInvalidArgument, "waring_exists requires k, m >= 1");
  }
  const BigInt q_minus_1 = ipow(BigInt(p), m) - 1;
  const BigInt kn = gcd(k, q_minus_1);
  for (std::uint64_t d : divisors(std::uint64_t{m})) {
    if (d == m) continue;
    const BigInt index = q_minus_1 / (ipow(BigInt(p), d) - 1);
    if (kn % index == 0) return false;
  }
  return true;
}

BigInt normalize_k(const BigInt& k, const BigInt& q) {
  if (k < 1 || q < 2) {
    throw Error(Errc::kInvalidArgument, "normalize_k requires k >= 1, q >= 2");
  }
  return gcd(k, q - 1);
}

std::string to_decimal(const BigInt& n) { return n.str(); }

BigInt parse_decimal(const std::string& text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(Errc::kInvalidArgument, "not a decimal integer: '" + text + "'");
  }
  return BigInt(text);
}

}  // namespace gpw
