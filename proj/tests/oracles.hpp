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

#ifndef GPW_TESTS_ORACLES_HPP_
#define GPW_TESTS_ORACLES_HPP_

// Deliberately naive reference implementations. None of them call into the
// library except for the shared BigInt type.

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::pair<u64, unsigned>> factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline u64 phi(u64 n) {
  u64 count = 0;
  for (u64 i = 1; i <= n; ++i) count += std::gcd(i, n) == 1;
  return count;
}

inline u64 pow_mod(u64 x, u64 e, u64 n) {
  u64 r = 1 % n;
  for (u64 i = 0; i < e; ++i) r = r * (x % n) % n;
  return r;
}

/// Smallest e >= 1 with x^e = 1 mod n, by stepping through powers.
inline u64 order(u64 x, u64 n) {
  if (n == 1) return 1;
  u64 y = x % n;
  for (u64 e = 1;; ++e) {
    if (y == 1) return e;
    y = y * (x % n) % n;
  }
}

/// Sum of x^i for 0 <= i < t, mod n, powers computed one by one.
inline u64 psi(u64 t, u64 x, u64 n) {
  u64 sum = 0, term = 1 % n;
  for (u64 i = 0; i < t; ++i) {
    sum = (sum + term) % n;
    term = term * (x % n) % n;
  }
  return sum;
}

inline u64 ipow(u64 b, u64 e) {
  u64 r = 1;
  for (u64 i = 0; i < e; ++i) r *= b;
  return r;
}

/// e | p^a - 1 and e does not divide p^t - 1 for 1 <= t < a. e = 1 counts
/// as primitive only for a = 1.
inline bool primitive_divisor(u64 e, u64 p, u64 a) {
  if ((ipow(p, a) - 1) % e != 0) return false;
  if (e == 1) return a == 1;
  for (u64 t = 1; t < a; ++t) {
    if ((ipow(p, t) - 1) % e == 0) return false;
  }
  return true;
}

/// Conditions of the reduction theorem straight from the definition.
inline bool main_conditions(u64 p, u64 a, u64 b, u64 c) {
  return primitive_divisor(c, p, a) && primitive_divisor(b * c, p, a * b);
}

// F_p[x]/(f) with elements stored as base-p integers (coefficient i is the
// i-th digit), arithmetic by schoolbook polynomial operations.
class NaiveField {
 public:
  NaiveField(u64 p, unsigned m, std::vector<u64> modulus_low)
      : p_(p), m_(m), low_(std::move(modulus_low)) {
    q_ = ipow(p, m);
  }

  /// Smallest monic irreducible modulus of degree m, found by trial division
  /// by every monic polynomial of degree 1..m/2.
  static NaiveField smallest(u64 p, unsigned m) {
    for (u64 v = 0;; ++v) {
      std::vector<u64> low = digits_of(v, p, m);
      if (irreducible(p, low)) return NaiveField(p, m, low);
    }
  }

  static bool irreducible(u64 p, const std::vector<u64>& low) {
    const unsigned m = static_cast<unsigned>(low.size());
    if (m == 1) return true;
    std::vector<u64> f = low;
    f.push_back(1);
    for (unsigned d = 1; d <= m / 2; ++d) {
      for (u64 v = 0; v < ipow(p, d); ++v) {
        std::vector<u64> g = digits_of(v, p, d);
        g.push_back(1);
        if (remainder(f, g, p).empty()) return false;
      }
    }
    return true;
  }

  u64 q() const { return q_; }
  u64 p() const { return p_; }

  u64 add(u64 x, u64 y) const {
    u64 r = 0, place = 1;
    for (unsigned i = 0; i < m_; ++i, place *= p_) {
      r += ((x / place % p_ + y / place % p_) % p_) * place;
    }
    return r;
  }

  u64 mul(u64 x, u64 y) const {
    const std::vector<u64> a = digits_of(x, p_, m_), b = digits_of(y, p_, m_);
    std::vector<u64> prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
    // x^m = -low(x)
    for (unsigned d = 2 * m_ - 1; d >= m_; --d) {
      const u64 top = prod[d];
      prod[d] = 0;
      if (top == 0) continue;
      for (unsigned i = 0; i < m_; ++i) {
        prod[d - m_ + i] = (prod[d - m_ + i] + (p_ - top) * low_[i]) % p_;
      }
    }
    u64 r = 0, place = 1;
    for (unsigned i = 0; i < m_; ++i, place *= p_) r += prod[i] * place;
    return r;
  }

  u64 pow(u64 x, u64 e) const {
    u64 r = 1;
    for (u64 i = 0; i < e; ++i) r = mul(r, x);
    return r;
  }

  /// The set {x^k : x != 0}, each power by repeated multiplication.
  std::set<u64> kth_powers(u64 k) const {
    std::set<u64> out;
    for (u64 x = 1; x < q_; ++x) out.insert(pow(x, k));
    return out;
  }

 private:
  static std::vector<u64> digits_of(u64 v, u64 p, unsigned m) {
    std::vector<u64> d(m);
    for (unsigned i = 0; i < m; ++i, v /= p) d[i] = v % p;
    return d;
  }

  // Remainder of f modulo monic g, trimmed; empty means zero.
  static std::vector<u64> remainder(std::vector<u64> f, const std::vector<u64>& g, u64 p) {
    const std::size_t dg = g.size() - 1;
    for (std::size_t d = f.size(); d-- > dg;) {
      const u64 top = f[d] % p;
      if (top == 0) continue;
      for (std::size_t i = 0; i <= dg; ++i) {
        f[d - dg + i] = (f[d - dg + i] + (p - top) * g[i]) % p;
      }
    }
    f.resize(dg);
    while (!f.empty() && f.back() % p == 0) f.pop_back();
    return f;
  }

  u64 p_;
  unsigned m_;
  std::vector<u64> low_;
  u64 q_;
};

/// Least s such that every element is a sum of s k-th powers, computed by
/// growing the sumset; nullopt when the sums never cover the field.
inline std::optional<u64> waring(const NaiveField& f, u64 k) {
  const std::set<u64> powers = f.kth_powers(k);
  std::vector<char> seen(f.q(), 0);
  seen[0] = 1;
  std::vector<u64> layer{0};
  u64 covered = 1;
  for (u64 s = 1;; ++s) {
    std::vector<u64> next;
    for (u64 x : layer) {
      for (u64 r : powers) {
        const u64 y = f.add(x, r);
        if (!seen[y]) {
          seen[y] = 1;
          next.push_back(y);
          ++covered;
        }
      }
    }
    if (covered == f.q()) return s;
    if (next.empty()) return std::nullopt;
    layer.swap(next);
  }
}

inline std::vector<std::pair<u64, unsigned>> prime_powers_up_to(u64 max_q) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p <= max_q; ++p) {
    if (!is_prime(p)) continue;
    u64 q = p;
    for (unsigned m = 1; q <= max_q; ++m, q *= p) out.emplace_back(p, m);
  }
  return out;
}

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace oracle

#endif  // GPW_TESTS_ORACLES_HPP_
