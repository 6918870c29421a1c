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

#include "gpw/reduction.hpp"

#include <algorithm>

#include "gpw/error.hpp"
#include "gpw/ff.hpp"
#include "gpw/gpgraph.hpp"

namespace gpw {
namespace {

BigInt power_minus_one(std::uint64_t p, std::uint64_t e) {
  return ipow(BigInt(p), e) - 1;
}

bool is_power_of_two(std::uint64_t b) { return b != 0 && (b & (b - 1)) == 0; }

unsigned log2_exact(std::uint64_t b) {
  unsigned t = 0;
  while (b > 1) {
    b >>= 1;
    ++t;
  }
  return t;
}

// u = (p^a - 1)/c when c is a primitive divisor of p^a - 1.
std::optional<BigInt> base_index(std::uint64_t p, std::uint64_t a, const BigInt& c) {
  if (p < 2 || a < 1 || c < 1) return std::nullopt;
  if (!is_primitive_divisor(c, BigInt(p), a)) return std::nullopt;
  return power_minus_one(p, a) / c;
}

// ord_{r^t}(x) = r^h with h <= t-1, i.e. x^(r^(t-1)) = 1 (mod r^t).
bool order_is_small_power(const BigInt& x, std::uint64_t r, unsigned t) {
  const BigInt rt = ipow(BigInt(r), t);
  if (gcd(x, rt) != 1) return false;
  return powm(x % rt, ipow(BigInt(r), t - 1), rt) == 1;
}

}  // namespace

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::kMainTheorem:
      return "MainTheorem";
    case Rule::kBPrime:
      return "BPrime";
    case Rule::kBPowerOf2:
      return "BPowerOf2";
    case Rule::kBPrimePower:
      return "BPrimePower";
    case Rule::kGeneralB:
      return "GeneralB";
    case Rule::kRadPhiCorollary:
      return "RadPhiCorollary";
  }
  return "?";
}

Rule parse_rule(const std::string& name) {
  for (Rule r : {Rule::kMainTheorem, Rule::kBPrime, Rule::kBPowerOf2,
                 Rule::kBPrimePower, Rule::kGeneralB, Rule::kRadPhiCorollary}) {
    if (to_string(r) == name) return r;
  }
  throw Error(Errc::kInvalidArgument, "unknown rule '" + name + "'");
}

std::string citation(Rule rule) {
  switch (rule) {
    case Rule::kMainTheorem:
      return "reduction theorem: c primitive in p^a-1 and bc primitive in p^ab-1";
    case Rule::kBPrime:
      return "reduction for prime b: b | p^a-1 and b does not divide u";
    case Rule::kBPowerOf2:
      return "reduction for b = 2^t: p^a = 1 mod 4 and u odd";
    case Rule::kBPrimePower:
      return "reduction for b = r^t: ord_{r^t}(p^a) = r^h with h < t";
    case Rule::kGeneralB:
      return "reduction for general b: order conditions on each odd prime power of b";
    case Rule::kRadPhiCorollary:
      return "reduction when phi(rad b) | a and gcd(u, b) = 1";
  }
  return "";
}

bool check_main_conditions(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                           const BigInt& c) {
  if (b < 1 || !base_index(p, a, c)) return false;
  return is_primitive_divisor(c * b, BigInt(p), a * b);
}

bool check_main_conditions_psi(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                               const BigInt& c) {
  const auto u = base_index(p, a, c);
  if (b < 1 || !u) return false;
  // b | u Psi_b(p^a) and b does not divide u Psi_l(p^a) for 1 <= l < b.
  const BigInt x = ipow(BigInt(p), a) % b;
  const BigInt ub = *u % b;
  BigInt psi = 0;
  for (std::uint64_t l = 1; l <= b; ++l) {
    psi = (psi * x + 1) % b;
    const bool divides = (ub * psi) % b == 0;
    if (l < b && divides) return false;
    if (l == b) return divides;
  }
  return false;
}

bool check_b_prime(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                   const BigInt& c) {
  if (!is_prime(b) || b == p) return false;
  const auto u = base_index(p, a, c);
  if (!u) return false;
  return ipow(BigInt(p), a) % b == 1 && *u % b != 0;
}

bool check_b_pow2(std::uint64_t p, std::uint64_t a, unsigned t, const BigInt& c) {
  if (p % 2 == 0 || t < 2) return false;
  const auto u = base_index(p, a, c);
  if (!u) return false;
  return ipow(BigInt(p), a) % 4 == 1 && *u % 2 == 1;
}

bool check_b_prime_power(std::uint64_t p, std::uint64_t a, std::uint64_t r,
                         unsigned t, const BigInt& c) {
  if (r % 2 == 0 || !is_prime(r) || r == p || t < 2) return false;
  const auto u = base_index(p, a, c);
  if (!u || gcd(*u, BigInt(r)) != 1) return false;
  return order_is_small_power(ipow(BigInt(p), a), r, t);
}

bool check_general_b(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                     const BigInt& c) {
  if (b < 2 || is_power_of_two(b) || b % p == 0) return false;
  const auto u = base_index(p, a, c);
  if (!u || gcd(*u, BigInt(b)) != 1) return false;
  const BigInt x = ipow(BigInt(p), a);
  for (const auto& f : factorize(BigInt(b)).factors) {
    if (f.prime == 2) {
      if (f.exponent >= 2 && x % 4 != 1) return false;
      continue;
    }
    if (!order_is_small_power(x, static_cast<std::uint64_t>(f.prime), f.exponent)) {
      return false;
    }
  }
  return true;
}

bool check_rad_phi(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                   const BigInt& c) {
  if (b < 2 || is_power_of_two(b) || b % p == 0) return false;
  const auto u = base_index(p, a, c);
  if (!u) return false;
  return BigInt(a) % euler_phi(radical(BigInt(b))) == 0 && gcd(*u, BigInt(b)) == 1;
}

bool check_rule(Rule rule, std::uint64_t p, std::uint64_t a, std::uint64_t b,
                const BigInt& c) {
  switch (rule) {
    case Rule::kMainTheorem:
      return check_main_conditions(p, a, b, c);
    case Rule::kBPrime:
      return check_b_prime(p, a, b, c);
    case Rule::kBPowerOf2:
      return is_power_of_two(b) && check_b_pow2(p, a, log2_exact(b), c);
    case Rule::kBPrimePower: {
      if (b < 2) return false;
      const Factorization f = factorize(BigInt(b));
      if (f.size() != 1) return false;
      return check_b_prime_power(p, a, static_cast<std::uint64_t>(f.factors[0].prime),
                                 f.factors[0].exponent, c);
    }
    case Rule::kGeneralB:
      return check_general_b(p, a, b, c);
    case Rule::kRadPhiCorollary:
      return check_rad_phi(p, a, b, c);
  }
  return false;
}

Rule classify_rule(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                   const BigInt& c) {
  for (Rule r : {Rule::kBPrime, Rule::kBPowerOf2, Rule::kBPrimePower,
                 Rule::kRadPhiCorollary, Rule::kGeneralB}) {
    if (check_rule(r, p, a, b, c)) return r;
  }
  return Rule::kMainTheorem;
}

std::vector<Decomposition> enumerate_decompositions(const BigInt& k,
                                                    std::uint64_t p, unsigned m) {
  const BigInt q_minus_1 = power_minus_one(p, m);
  if (k < 1 || q_minus_1 % k != 0) {
    throw Error(Errc::kNotNormalized, "k must divide p^m - 1");
  }
  const BigInt n = q_minus_1 / k;
  std::vector<Decomposition> out;
  std::vector<std::uint64_t> bs = divisors(std::uint64_t{m});
  std::reverse(bs.begin(), bs.end());  // ascending a
  for (std::uint64_t b : bs) {
    if (b <= 1 || n % b != 0) continue;
    const BigInt c = n / b;
    if (c <= 1) continue;
    const std::uint64_t a = m / b;
    if (!check_main_conditions(p, a, b, c)) continue;
    out.push_back({a, b, c, power_minus_one(p, a) / c});
  }
  return out;
}

std::string source_name(const Certificate& cert) {
  if (cert.source == BaseSource::kCatalogEntry) {
    return "CatalogEntry(" + cert.catalog_id + ")";
  }
  return to_string(cert.source);
}

namespace {

struct BaseValue {
  BigInt value;
  BaseSource source;
  std::string catalog_id;
};

std::optional<BaseValue> resolve_base(const BigInt& k, std::uint64_t p, unsigned a,
                                      std::uint64_t budget) {
  if (k == 1) return BaseValue{1, BaseSource::kTrivial, ""};
  if (const auto kv = known_value(k, p, a)) {
    return BaseValue{kv->value, kv->source,
                     kv->source == BaseSource::kCatalogEntry ? kv->family : ""};
  }
  if (ipow(BigInt(p), a) <= budget) {
    const GPGraph g(build_field(p, a, std::max(budget, kDefaultFieldBudget)),
                    static_cast<std::uint64_t>(k));
    const WaringResult r = waring_bfs(g, budget);
    if (r.value) return BaseValue{BigInt(*r.value), BaseSource::kBFS, ""};
  }
  return std::nullopt;
}

std::string family_for_source(BaseSource source, const std::string& catalog_id) {
  switch (source) {
    case BaseSource::kTrivial:
      return "trivial";
    case BaseSource::kSmallBound:
      return "small-bound";
    case BaseSource::kSemiprimitive:
      return "semiprimitive";
    case BaseSource::kExceptional:
      return "exceptional";
    case BaseSource::kKononen1:
      return "kononen1";
    case BaseSource::kKononen2:
      return "kononen2";
    case BaseSource::kCatalogEntry:
      return catalog_id;
    default:
      return "";
  }
}

}  // namespace

Certificate reduce(const BigInt& k, std::uint64_t p, unsigned m, std::uint64_t budget) {
  if (!is_prime(p) || m < 1) {
    throw Error(Errc::kInvalidPrime, "p must be prime and m >= 1");
  }
  const BigInt q_minus_1 = power_minus_one(p, m);
  if (k < 1 || q_minus_1 % k != 0) {
    throw Error(Errc::kNotNormalized, "k must divide p^m - 1");
  }
  if (!waring_exists(k, p, m)) {
    throw Error(Errc::kNonExistent, "g(" + to_decimal(k) + ", " + std::to_string(p) +
                                        "^" + std::to_string(m) + ") does not exist");
  }
  Certificate cert;
  cert.k = k;
  cert.p = p;
  cert.m = m;
  BigInt cur_k = k;
  unsigned cur_a = m;
  BigInt multiplier = 1;
  for (;;) {
    const auto decompositions = enumerate_decompositions(cur_k, p, cur_a);
    if (decompositions.empty()) break;
    const Decomposition& d = decompositions.front();
    const Rule rule = classify_rule(p, d.a, d.b, d.c);
    cert.steps.push_back({rule, p, d.a, d.b, d.c, d.u, citation(rule)});
    cur_k = d.u;
    cur_a = static_cast<unsigned>(d.a);
    multiplier *= d.b;
  }
  cert.base_k = cur_k;
  cert.base_a = cur_a;
  if (const auto base = resolve_base(cur_k, p, cur_a, budget)) {
    cert.source = base->source;
    cert.catalog_id = base->catalog_id;
    cert.base_value = base->value;
    cert.value = multiplier * base->value;
  } else {
    cert.source = BaseSource::kUnresolved;
  }
  return cert;
}

ReplayResult replay(const Certificate& cert, std::uint64_t budget) {
  auto fail = [](std::string message) { return ReplayResult{false, std::move(message)}; };
  if (!is_prime(cert.p) || cert.m < 1) return fail("target field is invalid");
  const BigInt q_minus_1 = power_minus_one(cert.p, cert.m);
  if (cert.k < 1 || q_minus_1 % cert.k != 0) return fail("target k does not divide q - 1");
  if (!waring_exists(cert.k, cert.p, cert.m)) return fail("target does not exist");

  BigInt cur_k = cert.k;
  std::uint64_t cur_a = cert.m;
  BigInt multiplier = 1;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const ReductionStep& s = cert.steps[i];
    const std::string where = "step " + std::to_string(i + 1) + ": ";
    if (s.p != cert.p) return fail(where + "characteristic differs from target");
    if (s.b <= 1 || s.c <= 1) return fail(where + "requires b > 1 and c > 1");
    if (s.a * s.b != cur_a) return fail(where + "a * b does not match the current degree");
    const BigInt base_order = power_minus_one(s.p, s.a);
    if (base_order % s.c != 0 || base_order / s.c != s.u) {
      return fail(where + "u != (p^a - 1)/c");
    }
    if (cur_k * s.b * s.c != power_minus_one(s.p, s.a * s.b)) {
      return fail(where + "k != (p^ab - 1)/(bc)");
    }
    if (!check_main_conditions(s.p, s.a, s.b, s.c)) {
      return fail(where + "primitive divisor conditions fail");
    }
    if (!check_rule(s.rule, s.p, s.a, s.b, s.c)) {
      return fail(where + "conditions of rule " + to_string(s.rule) + " fail");
    }
    if (s.citation != citation(s.rule)) return fail(where + "citation mismatch");
    cur_k = s.u;
    cur_a = s.a;
    multiplier *= s.b;
  }
  if (cert.base_k != cur_k || cert.base_a != cur_a) {
    return fail("base does not match the end of the chain");
  }
  if (cert.source == BaseSource::kUnresolved) {
    if (cert.value || cert.base_value) return fail("unresolved certificate carries a value");
    return {true, "unresolved base g(" + to_decimal(cur_k) + ", " +
                      std::to_string(cert.p) + "^" + std::to_string(cur_a) + ")"};
  }
  if (!cert.base_value || !cert.value) return fail("resolved certificate lacks a value");
  if (*cert.value != multiplier * *cert.base_value) {
    return fail("value != (product of b) * base value");
  }
  if (cert.source == BaseSource::kBFS) {
    if (ipow(BigInt(cert.p), cur_a) > budget) return fail("BFS base beyond replay budget");
    const GPGraph g(build_field(cert.p, static_cast<unsigned>(cur_a),
                                std::max(budget, kDefaultFieldBudget)),
                    static_cast<std::uint64_t>(cur_k));
    const WaringResult r = waring_bfs(g, budget);
    if (!r.value || BigInt(*r.value) != *cert.base_value) {
      return fail("BFS does not reproduce the base value");
    }
    return {true, "ok"};
  }
  if (cert.source != BaseSource::kCatalogEntry && !cert.catalog_id.empty()) {
    return fail("catalog id set for a non-catalog source");
  }
  const std::string family = family_for_source(cert.source, cert.catalog_id);
  std::optional<KnownValue> kv;
  try {
    kv = match_family(family, cur_k, cert.p, static_cast<unsigned>(cur_a));
  } catch (const Error&) {
    return fail("unknown catalog family '" + family + "'");
  }
  if (!kv || kv->value != *cert.base_value || kv->source != cert.source) {
    return fail("base source " + source_name(cert) + " does not yield the base value");
  }
  return {true, "ok"};
}

ClosedForm kononen1(std::uint64_t p, std::uint64_t r, unsigned e) {
  if (!is_prime(p) || !is_prime(r) || p == r || e < 1) {
    throw Error(Errc::kInvalidArgument, "kononen1 needs distinct primes p, r and e >= 1");
  }
  if (r == 2 && e >= 3) {
    throw Error(Errc::kInvalidArgument, "there are no primitive roots modulo 2^e, e >= 3");
  }
  const BigInt re = ipow(BigInt(r), e);
  const BigInt phi = euler_phi(re);
  if (mult_order(BigInt(p) % re, re) != phi) {
    throw Error(Errc::kNotPrimitiveRoot, std::to_string(p) + " is not a primitive root mod " +
                                             to_decimal(re));
  }
  const BigInt q = ipow(BigInt(p), static_cast<std::uint64_t>(phi));
  return {(q - 1) / re, q, (BigInt(p) - 1) * phi / 2};
}

ClosedForm kononen2(std::uint64_t p, std::uint64_t r, unsigned e) {
  if (!is_prime(p) || !is_prime(r) || p == r || p == 2 || r == 2 || e < 1) {
    throw Error(Errc::kInvalidArgument, "kononen2 needs distinct odd primes p, r and e >= 1");
  }
  const BigInt re = ipow(BigInt(r), e);
  const BigInt phi = euler_phi(re);
  if (mult_order(BigInt(p) % re, re) != phi) {
    throw Error(Errc::kNotPrimitiveRoot, std::to_string(p) + " is not a primitive root mod " +
                                             to_decimal(re));
  }
  const BigInt q = ipow(BigInt(p), static_cast<std::uint64_t>(phi));
  const BigInt bp(p), br(r);
  // floor(pr/4 - p/(4r)) and floor(pr/4 - r/(4p)) in exact integer form
  const BigInt floor_part = r < p ? bp * (br * br - 1) / (4 * br)
                                  : br * (bp * bp - 1) / (4 * bp);
  return {(q - 1) / (2 * re), q, ipow(br, e - 1) * floor_part};
}

ClosedForm hamming_value(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  if (!is_prime(p) || !is_prime(b) || b == p || a < 1) {
    throw Error(Errc::kPreconditionFailed, "hamming_value needs primes b != p and a >= 1");
  }
  const BigInt base = power_minus_one(p, a);
  if (base % b != 0) {
    throw Error(Errc::kPreconditionFailed, "b must divide p^a - 1");
  }
  const BigInt q = ipow(BigInt(p), a * b);
  return {(q - 1) / (b * base), q, BigInt(b)};
}

}  // namespace gpw
