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

#include "gpw/ff.hpp"

#include <algorithm>
#include <string>

#include "gpw/arith.hpp"
#include "gpw/error.hpp"

namespace gpw {
namespace {

using Poly = std::vector<std::uint32_t>;  // low coefficient first

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Arithmetic in F_p[x]/(f) for monic f of degree m. Residues are length m.
class QuotientRing {
 public:
  QuotientRing(std::uint32_t p, const Poly& low) : p_(p), low_(low) {}

  unsigned degree() const { return static_cast<unsigned>(low_.size()); }

  Poly mul(const Poly& a, const Poly& b) const {
    const unsigned m = degree();
    std::vector<std::uint64_t> prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < m; ++j) {
        prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
      }
    }
    for (unsigned i = 2 * m - 1; i >= m; --i) {
      const std::uint64_t t = prod[i] % p_;
      if (t == 0) continue;
      // x^m = -sum low_j x^j
      for (unsigned j = 0; j < m; ++j) {
        prod[i - m + j] = (prod[i - m + j] + (p_ - t) * low_[j]) % p_;
      }
      prod[i] = 0;
    }
    Poly out(m);
    for (unsigned i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
  }

  Poly pow(Poly base, std::uint64_t e) const {
    Poly result = one();
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      e >>= 1;
      if (e > 0) base = mul(base, base);
    }
    return result;
  }

  Poly one() const {
    Poly r(degree(), 0);
    r[0] = 1;
    return r;
  }

  Poly x() const {
    Poly r(degree(), 0);
    if (degree() == 1) {
      r[0] = (p_ - low_[0]) % p_;
    } else {
      r[1] = 1;
    }
    return r;
  }

 private:
  std::uint32_t p_;
  Poly low_;
};

// Remainder of a modulo b over F_p (b nonzero, trimmed).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = static_cast<std::uint32_t>(
          (a[shift + j] + (p - factor) * b[j]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(std::uint32_t p, const Poly& low) {
  const unsigned m = static_cast<unsigned>(low.size());
  const QuotientRing ring(p, low);
  const Poly x = ring.x();
  Poly full = low;
  full.push_back(1);

  // frobenius[d] = x^(p^d) mod f
  std::vector<Poly> frobenius{x};
  for (unsigned d = 1; d <= m; ++d) frobenius.push_back(ring.pow(frobenius.back(), p));
  if (frobenius[m] != x) return false;
  for (std::uint64_t d : divisors(std::uint64_t{m})) {
    if (d == m) continue;
    Poly diff = frobenius[d];
    for (unsigned i = 0; i < m; ++i) diff[i] = (diff[i] + p - x[i]) % p;
    const Poly g = poly_gcd(full, diff, p);
    if (g.size() != 1) return false;  // nonconstant or zero difference
  }
  return true;
}

Poly to_poly(std::uint64_t value, std::uint32_t p, unsigned m) {
  Poly out(m);
  for (unsigned i = 0; i < m; ++i) {
    out[i] = static_cast<std::uint32_t>(value % p);
    value /= p;
  }
  return out;
}

}  // namespace

FieldPtr build_field(std::uint64_t p, unsigned m, std::uint64_t budget) {
  if (!is_prime(p)) {
    throw Error(Errc::kInvalidPrime, std::to_string(p) + " is not prime");
  }
  if (m == 0) throw Error(Errc::kInvalidArgument, "field degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > budget / p || q * p > 0xffffffffULL) {
      throw Error(Errc::kBudgetExceeded,
                  std::to_string(p) + "^" + std::to_string(m) +
                      " exceeds the field budget " + std::to_string(budget));
    }
    q *= p;
  }
  if (q > budget) {
    throw Error(Errc::kBudgetExceeded,
                std::to_string(p) + "^" + std::to_string(m) +
                    " exceeds the field budget " + std::to_string(budget));
  }

  auto table = std::shared_ptr<FieldTable>(new FieldTable());
  FieldTable& f = *table;
  const auto pp = static_cast<std::uint32_t>(p);
  f.spec_.p = pp;
  f.spec_.m = m;
  f.q_ = static_cast<std::uint32_t>(q);
  f.pow_p_.resize(m + 1);
  f.pow_p_[0] = 1;
  for (unsigned i = 1; i <= m; ++i) {
    f.pow_p_[i] = static_cast<std::uint32_t>(std::min<std::uint64_t>(
        std::uint64_t{f.pow_p_[i - 1]} * pp, 0xffffffffULL));
  }

  // Smallest monic irreducible modulus.
  for (std::uint64_t v = 0; v < q; ++v) {
    if (m >= 2 && v % p == 0) continue;  // divisible by x
    Poly low = to_poly(v, pp, m);
    if (is_irreducible(pp, low)) {
      f.spec_.modulus = std::move(low);
      break;
    }
  }
  const QuotientRing ring(pp, f.spec_.modulus);

  // Smallest generator of the multiplicative group.
  std::vector<std::uint64_t> order_primes;
  for (const auto& pf : factorize(BigInt(q - 1)).factors) {
    order_primes.push_back(static_cast<std::uint64_t>(pf.prime));
  }
  Poly omega;
  for (std::uint64_t g = 1; g < q; ++g) {
    Poly candidate = to_poly(g, pp, m);
    bool generator = true;
    for (std::uint64_t s : order_primes) {
      if (ring.pow(candidate, (q - 1) / s) == ring.one()) {
        generator = false;
        break;
      }
    }
    if (generator) {
      f.omega_ = static_cast<std::uint32_t>(g);
      omega = std::move(candidate);
      break;
    }
  }

  f.exp_.resize(q - 1);
  f.log_.assign(q, 0xffffffffu);
  if (pp == 2) {
    // Bitmask polynomials; multiplication by omega via carry-less shifts.
    std::uint64_t reduce_mask = 0;
    for (unsigned i = 0; i < m; ++i) reduce_mask |= std::uint64_t{f.spec_.modulus[i]} << i;
    std::uint64_t cur = 1;
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
      f.exp_[i] = static_cast<std::uint32_t>(cur);
      std::uint64_t acc = 0, shifted = cur;
      for (unsigned j = 0; j < m; ++j) {
        if ((f.omega_ >> j) & 1) acc ^= shifted;
        shifted <<= 1;
        if ((shifted >> m) & 1) shifted = (shifted ^ (std::uint64_t{1} << m)) ^ reduce_mask;
      }
      cur = acc;
    }
  } else if (m == 1) {
    std::uint64_t cur = 1;
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
      f.exp_[i] = static_cast<std::uint32_t>(cur);
      cur = cur * f.omega_ % p;
    }
  } else {
    unsigned omega_degree = 0;
    for (unsigned j = 0; j < m; ++j) {
      if (omega[j] != 0) omega_degree = j;
    }
    Poly cur = ring.one();
    std::vector<std::uint64_t> acc(m);
    Poly shifted(m);
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
      f.exp_[i] = f.from_digits(cur);
      std::fill(acc.begin(), acc.end(), 0);
      shifted = cur;
      for (unsigned j = 0; j <= omega_degree; ++j) {
        if (omega[j] != 0) {
          for (unsigned t = 0; t < m; ++t) acc[t] += std::uint64_t{omega[j]} * shifted[t];
        }
        if (j == omega_degree) break;
        // shifted *= x
        const std::uint32_t top = shifted[m - 1];
        for (unsigned t = m - 1; t > 0; --t) shifted[t] = shifted[t - 1];
        shifted[0] = 0;
        if (top != 0) {
          for (unsigned t = 0; t < m; ++t) {
            shifted[t] = static_cast<std::uint32_t>(
                (shifted[t] + std::uint64_t{pp - top} * f.spec_.modulus[t]) % pp);
          }
        }
      }
      for (unsigned t = 0; t < m; ++t) cur[t] = static_cast<std::uint32_t>(acc[t] % pp);
    }
  }
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    const std::uint32_t x = f.exp_[i];
    if (x == 0 || x >= q || f.log_[x] != 0xffffffffu) {
      throw Error(Errc::kWitnessVerificationFailed,
                  "exp table is not a bijection onto F_q^*");
    }
    f.log_[x] = i;
  }
  f.init_addition();
  return table;
}

void FieldTable::init_addition() {
  const std::uint32_t p = spec_.p;
  const unsigned m = spec_.m;
  if (p == 2 || m == 1) {
    // One chunk holding the whole element.
    kind_ = p == 2 ? AddKind::kBinary : AddKind::kPrime;
    chunks_ = 1;
    chunk_base_ = q_;
    chunk_pow_[0] = 1;
    return;
  }
  constexpr std::uint64_t kTableLimit = 1 << 16;
  unsigned per_chunk = 0;
  std::uint64_t base = 1;
  while (per_chunk < m && base * p * base * p <= kTableLimit) {
    base *= p;
    ++per_chunk;
  }
  if (per_chunk == 0) {
    kind_ = AddKind::kDigit;
    per_chunk = 1;
    base = p;
  } else {
    kind_ = AddKind::kChunkTable;
  }
  chunks_ = (m + per_chunk - 1) / per_chunk;
  if (chunks_ > kMaxChunks) {
    throw Error(Errc::kBudgetExceeded, "field degree too large for chunked addition");
  }
  chunk_base_ = static_cast<std::uint32_t>(base);
  for (unsigned j = 0; j < chunks_; ++j) chunk_pow_[j] = pow_p_[j * per_chunk];
  if (kind_ == AddKind::kChunkTable) {
    chunk_sum_.resize(base * base);
    for (std::uint32_t a = 0; a < base; ++a) {
      for (std::uint32_t b = 0; b < base; ++b) {
        std::uint32_t x = a, y = b, out = 0, scale = 1;
        for (unsigned d = 0; d < per_chunk; ++d) {
          out += ((x % p + y % p) % p) * scale;
          x /= p;
          y /= p;
          scale *= p;
        }
        chunk_sum_[a * base + b] = out;
      }
    }
  }
}

FieldTable::Split FieldTable::split(std::uint32_t x) const {
  Split out{};
  for (unsigned j = 0; j < chunks_; ++j) {
    out[j] = x % chunk_base_;
    x /= chunk_base_;
  }
  return out;
}

std::uint32_t FieldTable::add_split(const Split& x, const Split& y) const {
  if (kind_ == AddKind::kBinary || kind_ == AddKind::kPrime) return add(x[0], y[0]);
  std::uint32_t v = 0;
  if (kind_ == AddKind::kChunkTable) {
    for (unsigned j = 0; j < chunks_; ++j) {
      v += chunk_sum_[x[j] * chunk_base_ + y[j]] * chunk_pow_[j];
    }
  } else {
    for (unsigned j = 0; j < chunks_; ++j) {
      std::uint32_t s = x[j] + y[j];
      if (s >= spec_.p) s -= spec_.p;
      v += s * chunk_pow_[j];
    }
  }
  return v;
}

std::uint32_t FieldTable::add(std::uint32_t x, std::uint32_t y) const {
  switch (kind_) {
    case AddKind::kBinary:
      return x ^ y;
    case AddKind::kPrime: {
      const std::uint32_t s = x + y;
      return s >= spec_.p ? s - spec_.p : s;
    }
    default:
      return add_split(split(x), split(y));
  }
}

std::uint32_t FieldTable::neg(std::uint32_t x) const {
  const std::uint32_t p = spec_.p;
  if (p == 2) return x;
  std::uint32_t out = 0;
  for (unsigned i = 0; i < spec_.m; ++i) {
    const std::uint32_t d = x % p;
    x /= p;
    out += ((p - d) % p) * pow_p_[i];
  }
  return out;
}

std::uint32_t FieldTable::inv(std::uint32_t x) const {
  if (x == 0) throw Error(Errc::kInvalidArgument, "zero has no inverse");
  const std::uint32_t l = log_[x];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

std::uint32_t FieldTable::pow(std::uint32_t x, std::uint64_t e) const {
  if (x == 0) return e == 0 ? 1 : 0;
  const std::uint64_t order = q_ - 1;
  return exp_[std::uint64_t{log_[x]} * (e % order) % order];
}

std::uint32_t FieldTable::digit(std::uint32_t x, unsigned i) const {
  return (x / pow_p_[i]) % spec_.p;
}

std::vector<std::uint32_t> FieldTable::digits(std::uint32_t x) const {
  std::vector<std::uint32_t> out(spec_.m);
  for (unsigned i = 0; i < spec_.m; ++i) {
    out[i] = x % spec_.p;
    x /= spec_.p;
  }
  return out;
}

std::uint32_t FieldTable::from_digits(std::span<const std::uint32_t> d) const {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < spec_.m && i < d.size(); ++i) out += d[i] * pow_p_[i];
  return out;
}

std::uint32_t elem_add(const FieldTable& f, std::uint32_t x, std::uint32_t y) {
  return f.add(x, y);
}

std::uint32_t elem_mul(const FieldTable& f, std::uint32_t x, std::uint32_t y) {
  return f.mul(x, y);
}

bool ResidueSet::contains(std::uint32_t x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

ResidueSet power_residues(const FieldTable& f, std::uint64_t k) {
  const std::uint64_t order = f.q() - 1;
  if (k == 0 || order % k != 0) {
    throw Error(Errc::kNotNormalized,
                "k = " + std::to_string(k) + " does not divide q - 1 = " +
                    std::to_string(order));
  }
  ResidueSet out;
  out.k = k;
  const std::uint64_t n = order / k;
  out.members.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.members.push_back(f.exp(k * i));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace gpw
