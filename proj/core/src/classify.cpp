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

#include "gpw/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "gpw/error.hpp"
#include "gpw/ff.hpp"
#include "gpw/gpgraph.hpp"
#include "gpw/reduction.hpp"

namespace gpw {
namespace {

BigInt big_pow(std::uint64_t p, std::uint64_t e) { return ipow(BigInt(p), e); }

bool is_power_of_two(std::uint64_t b) { return b != 0 && (b & (b - 1)) == 0; }

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = std::max<std::uint64_t>(lo, 2); x <= hi; ++x) {
    if (is_prime(x)) out.push_back(x);
  }
  return out;
}

// g(u, p^a) >= 1 from the catalog or, when small enough, from BFS.
std::optional<BigInt> base_waring(const BigInt& u, std::uint64_t p, std::uint64_t a,
                                  std::uint64_t budget) {
  const auto au = static_cast<unsigned>(a);
  if (!waring_exists(u, p, au)) return std::nullopt;
  if (const auto kv = known_value(u, p, au)) return kv->value;
  if (big_pow(p, a) > budget) return std::nullopt;
  const GPGraph g(build_field(p, au, std::max(budget, kDefaultFieldBudget)),
                  static_cast<std::uint64_t>(u));
  const WaringResult r = waring_bfs(g, budget);
  if (!r.value) return std::nullopt;
  return BigInt(*r.value);
}

// (u, p^a) has g = 2 by the semiprimitive theorem or by 2 <= u <= p^(a/4) - 1.
bool base_has_value_two(const BigInt& u, std::uint64_t p, unsigned a) {
  if (u < 2) return false;
  if (is_semiprimitive(u, p, a) && !is_subfield(u, p, a)) return true;
  const BigInt v = u + 1;
  return v * v * v * v <= big_pow(p, a);
}

KnownValue make_value(BigInt value, BaseSource source, const std::string& family) {
  KnownValue kv;
  kv.value = std::move(value);
  kv.source = source;
  kv.family = family;
  for (const auto& f : catalog_families()) {
    if (f.id == family) kv.citation = f.citation;
  }
  return kv;
}

std::optional<KnownValue> match_kononen(bool second, const BigInt& k, std::uint64_t p,
                                        unsigned m) {
  const BigInt q_minus_1 = big_pow(p, m) - 1;
  if (k < 1 || q_minus_1 % k != 0) return std::nullopt;
  BigInt n = q_minus_1 / k;
  if (second) {
    if (p == 2 || n % 2 != 0) return std::nullopt;
    n /= 2;
  }
  // phi(r^e) = m forces r^e <= 2m + 1.
  if (n < 2 || n > 2 * BigInt(m) + 1) return std::nullopt;
  const Factorization f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  const auto r = static_cast<std::uint64_t>(f.factors[0].prime);
  const unsigned e = f.factors[0].exponent;
  if (r == p || euler_phi(n) != m) return std::nullopt;
  try {
    const ClosedForm cf = second ? kononen2(p, r, e) : kononen1(p, r, e);
    if (cf.k != k) return std::nullopt;
    return make_value(cf.value, second ? BaseSource::kKononen2 : BaseSource::kKononen1,
                      second ? "kononen2" : "kononen1");
  } catch (const Error&) {
    return std::nullopt;
  }
}

using Matcher =
    std::function<std::optional<BigInt>(const BigInt& k, std::uint64_t p, unsigned m)>;

std::optional<BigInt> match_hamming(bool doubled, const BigInt& k, std::uint64_t p,
                                    unsigned m) {
  if (doubled && p == 2) return std::nullopt;
  const BigInt q_minus_1 = big_pow(p, m) - 1;
  for (std::uint64_t b : divisors(std::uint64_t{m})) {
    if (!is_prime(b) || b == p || (doubled && b == 2)) continue;
    const BigInt base = big_pow(p, m / b) - 1;
    if (base % b != 0) continue;
    if (k * b * base == (doubled ? 2 * q_minus_1 : q_minus_1)) {
      return BigInt(doubled ? 2 * b : b);
    }
  }
  return std::nullopt;
}

std::optional<BigInt> match_even_power(const BigInt& k, std::uint64_t p, unsigned m) {
  if (p == 2) return std::nullopt;
  const BigInt n = (big_pow(p, m) - 1) / k;
  for (unsigned t = 1; (m >> t) << t == m; ++t) {
    const unsigned a = m >> t;
    const BigInt two_t = BigInt(1) << t;
    if (n % two_t != 0) continue;
    const BigInt c = n / two_t;
    const BigInt base = big_pow(p, a) - 1;
    if (base % c != 0) continue;
    const BigInt u = base / c;
    if (u % 2 == 0 || base % 4 != 0) continue;
    if (!is_primitive_divisor(c, BigInt(p), a)) continue;
    if (base_has_value_two(u, p, a)) return two_t * 2;
  }
  return std::nullopt;
}

std::optional<BigInt> match_even_b(const BigInt& k, std::uint64_t p, unsigned m) {
  const BigInt n = (big_pow(p, m) - 1) / k;
  for (std::uint64_t b : divisors(std::uint64_t{m})) {
    if (b < 3 || is_power_of_two(b) || b % p == 0 || n % b != 0) continue;
    const auto a = static_cast<unsigned>(m / b);
    if (a % static_cast<std::uint64_t>(euler_phi(radical(BigInt(b)))) != 0) continue;
    const BigInt c = n / b;
    const BigInt base = big_pow(p, a) - 1;
    if (base % c != 0) continue;
    const BigInt u = base / c;
    if (gcd(u, BigInt(b)) != 1 || !is_primitive_divisor(c, BigInt(p), a)) continue;
    if (base_has_value_two(u, p, a)) return BigInt(2 * b);
  }
  return std::nullopt;
}

std::optional<BigInt> match_list(const std::string& family, const BigInt& k,
                                 std::uint64_t p, unsigned m) {
  for (const auto& e : list_entries()) {
    if (e.family == family && !e.disputed && e.p == p && e.m == m && k == e.k) {
      return BigInt(e.claimed);
    }
  }
  return std::nullopt;
}

struct FamilyDef {
  CatalogFamily info;
  BaseSource source;
  Matcher matcher;  // empty for families without a closed form
};

const std::vector<FamilyDef>& family_defs() {
  static const std::vector<FamilyDef> defs = [] {
    std::vector<FamilyDef> d;
    auto add = [&](std::string id, std::string predicate, std::string value,
                   std::string cite, BaseSource source, Matcher matcher) {
      d.push_back({{std::move(id), std::move(predicate), std::move(value), std::move(cite)},
                   source,
                   std::move(matcher)});
    };
    add("trivial", "k = 1", "1", "g(1, q) = 1: every element is a first power",
        BaseSource::kTrivial, [](const BigInt& k, std::uint64_t, unsigned) {
          return k == 1 ? std::optional<BigInt>(1) : std::nullopt;
        });
    add("small-bound", "2 <= k and (k - 1)^4 <= q", "2",
        "small-k bound: k | q-1 and 2 <= k <= q^(1/4) + 1 give g = 2",
        BaseSource::kSmallBound, [](const BigInt& k, std::uint64_t p, unsigned m) {
          return k >= 2 && small_range(k, big_pow(p, m)) ? std::optional<BigInt>(2)
                                                         : std::nullopt;
        });
    add("semiprimitive", "-1 is a power of p mod k, k != p^(m/2) + 1", "2",
        "semiprimitive pairs give strongly regular graphs of diameter 2",
        BaseSource::kSemiprimitive, [](const BigInt& k, std::uint64_t p, unsigned m) {
          return k >= 2 && is_semiprimitive(k, p, m) && !is_subfield(k, p, m)
                     ? std::optional<BigInt>(2)
                     : std::nullopt;
        });
    add("exceptional", "(k, p^m) is one of the 11 sporadic two-weight pairs", "2",
        "exceptional two-weight irreducible cyclic code pairs give diameter 2",
        BaseSource::kExceptional, [](const BigInt& k, std::uint64_t p, unsigned m) {
          return is_exceptional(k, p, m) ? std::optional<BigInt>(2) : std::nullopt;
        });
    add("kononen1", "k = (p^phi(r^e) - 1)/r^e, p a primitive root mod r^e",
        "(p - 1) phi(r^e) / 2", "Kononen's closed form for k = (q-1)/r^e",
        BaseSource::kKononen1, nullptr);
    add("kononen2", "k = (p^phi(r^e) - 1)/(2 r^e), p, r odd, p a primitive root mod r^e",
        "r^(e-1) floor(pr/4 - p/(4r)) if r < p, else r^(e-1) floor(pr/4 - r/(4p))",
        "Kononen's closed form for k = (q-1)/(2 r^e)", BaseSource::kKononen2, nullptr);
    add("hamming", "k = (p^ab - 1)/(b (p^a - 1)), b prime, b != p, b | p^a - 1", "b",
        "reduction with c = p^a - 1 and g(1, p^a) = 1", BaseSource::kCatalogEntry,
        [](const BigInt& k, std::uint64_t p, unsigned m) {
          return match_hamming(false, k, p, m);
        });
    add("hamming-double",
        "k = 2 (p^ab - 1)/(b (p^a - 1)), p, b odd primes, b | p^a - 1", "2b",
        "reduction with c = (p^a - 1)/2 and g(2, p^a) = 2", BaseSource::kCatalogEntry,
        [](const BigInt& k, std::uint64_t p, unsigned m) {
          return match_hamming(true, k, p, m);
        });
    add("safe-prime", "p = 2b + 1, b odd prime, k = (p^b - 1)/b^2, m = b", "2b",
        "reduction with a = 1, c = b and g(2, p) = 2", BaseSource::kCatalogEntry,
        [](const BigInt& k, std::uint64_t p, unsigned m) -> std::optional<BigInt> {
          if (m < 3 || m % 2 == 0 || !is_prime(std::uint64_t{m}) || p != 2 * m + 1) {
            return std::nullopt;
          }
          if (k * m * m != big_pow(p, m) - 1) return std::nullopt;
          return BigInt(2 * m);
        });
    add("p-minus-1", "p = 3 mod 4, p >= 7, k = (p^2 - 1)/4, m = 2", "p - 1",
        "reduction with a = 1, b = c = 2 and g((p-1)/2, p) = (p-1)/2",
        BaseSource::kCatalogEntry,
        [](const BigInt& k, std::uint64_t p, unsigned m) -> std::optional<BigInt> {
          if (m != 2 || p % 4 != 3 || p < 7 || 4 * k != big_pow(p, 2) - 1) {
            return std::nullopt;
          }
          return BigInt(p - 1);
        });
    add("quartic-four",
        "p odd, p > 3, m = 4, k = 3 (p^2 + 1)/2; or k = 4 (p^2 + 1) with p = +-3 mod 8, "
        "p >= 67",
        "4", "reduction with a = 2, b = 2 and g(3, p^2) = g(8, p^2) = 2",
        BaseSource::kCatalogEntry,
        [](const BigInt& k, std::uint64_t p, unsigned m) -> std::optional<BigInt> {
          if (m != 4 || p <= 3) return std::nullopt;
          const BigInt s = big_pow(p, 2) + 1;
          if (2 * k == 3 * s) return BigInt(4);
          if ((p % 8 == 3 || p % 8 == 5) && p >= 67 && k == 4 * s) return BigInt(4);
          return std::nullopt;
        });
    add("even-power-of-2",
        "k = (p^(2^t a) - 1)/(2^t c), u = (p^a - 1)/c odd > 1, p^a = 1 mod 4, g(u, p^a) = 2 "
        "by the semiprimitive theorem or 2 <= u <= p^(a/4) - 1",
        "2^(t+1)", "reduction with b = 2^t over a base of value 2",
        BaseSource::kCatalogEntry, match_even_power);
    add("even-2b",
        "k = (p^ab - 1)/(bc), b > 1 not a power of 2, p does not divide b, phi(rad b) | a, "
        "gcd(u, b) = 1, g(u, p^a) = 2 as above",
        "2b", "reduction with phi(rad b) | a over a base of value 2",
        BaseSource::kCatalogEntry, match_even_b);
    add("half-plus-one", "p odd, k = (p^a + 1)/2, m = 2a", "2",
        "reduction with b = 2, c = p^a - 1", BaseSource::kCatalogEntry,
        [](const BigInt& k, std::uint64_t p, unsigned m) -> std::optional<BigInt> {
          if (p == 2 || m % 2 != 0 || 2 * k != big_pow(p, m / 2) + 1) return std::nullopt;
          return BigInt(2);
        });
    add("binary-hamming",
        "p = 2 and b = 3, 5, 7 with a = 2t, 4t, 3t: k = (2^ab - 1)/(b (2^a - 1))", "b",
        "reduction with p = 2, c = 2^a - 1", BaseSource::kCatalogEntry,
        [](const BigInt& k, std::uint64_t p, unsigned m) -> std::optional<BigInt> {
          if (p != 2) return std::nullopt;
          for (auto [b, step] : {std::pair<unsigned, unsigned>{3, 2}, {5, 4}, {7, 3}}) {
            if (m % (b * step) != 0) continue;
            const unsigned a = m / b;
            if (k * b * (big_pow(2, a) - 1) == big_pow(2, m) - 1) return BigInt(b);
          }
          return std::nullopt;
        });
    add("semiprimitive-h", "k = (p^l + 1)/h, 1 < h < p^l + 1, m = 2l", "2",
        "semiprimitive pairs (p^l + 1)/h at q = p^(2l)", BaseSource::kCatalogEntry,
        [](const BigInt& k, std::uint64_t p, unsigned m) -> std::optional<BigInt> {
          if (m % 2 != 0 || k < 2) return std::nullopt;
          const BigInt s = big_pow(p, m / 2) + 1;
          if (k < s && s % k == 0) return BigInt(2);
          return std::nullopt;
        });
    add("quadratic-lift", "p odd, c primitive in p^a - 1, u = (p^a - 1)/c odd, m = 2a",
        "2 g(u, p^a)", "reduction with b = 2", BaseSource::kCatalogEntry, nullptr);
    add("prime-base", "b prime, b, c | p - 1, b does not divide (p - 1)/c, m = b",
        "b g((p - 1)/c, p)", "reduction with a = 1", BaseSource::kCatalogEntry, nullptr);
    add("square-b", "p = bt + 1, b prime not dividing t, k = (p^b - 1)/b^2, m = b",
        "b g(t, p)", "reduction with a = 1 and c = b", BaseSource::kCatalogEntry, nullptr);
    add("small-g4", "listed pairs (k, p) with 2 <= k <= 11 and g = 4", "4",
        "small values from a handbook table, each checked by BFS",
        BaseSource::kCatalogEntry, [](const BigInt& k, std::uint64_t p, unsigned m) {
          return match_list("small-g4", k, p, m);
        });
    add("kononen-g4", "listed pairs at q = 25 and q = 81 attributed to Kononen's formula",
        "4", "value 4 instances of Kononen's formula, each checked by BFS",
        BaseSource::kCatalogEntry, [](const BigInt& k, std::uint64_t p, unsigned m) {
          return match_list("kononen-g4", k, p, m);
        });
    return d;
  }();
  return defs;
}

const FamilyDef& family_def(const std::string& id) {
  for (const auto& d : family_defs()) {
    if (d.info.id == id) return d;
  }
  throw Error(Errc::kUnknownFamily, "unknown family '" + id + "'");
}

}  // namespace

std::string to_string(BaseSource source) {
  switch (source) {
    case BaseSource::kTrivial:
      return "Trivial";
    case BaseSource::kBFS:
      return "BFS";
    case BaseSource::kSmallBound:
      return "SmallBound";
    case BaseSource::kSemiprimitive:
      return "Semiprimitive";
    case BaseSource::kExceptional:
      return "Exceptional";
    case BaseSource::kKononen1:
      return "Kononen1";
    case BaseSource::kKononen2:
      return "Kononen2";
    case BaseSource::kCatalogEntry:
      return "CatalogEntry";
    case BaseSource::kUnresolved:
      return "Unresolved";
  }
  return "?";
}

std::string to_string(PairKind kind) {
  switch (kind) {
    case PairKind::kSubfield:
      return "Subfield";
    case PairKind::kSemiprimitive:
      return "Semiprimitive";
    case PairKind::kExceptional:
      return "Exceptional";
    case PairKind::kSmallRange:
      return "SmallRange";
    case PairKind::kUnclassified:
      return "Unclassified";
  }
  return "?";
}

bool small_range(const BigInt& k, const BigInt& q) {
  const BigInt d = k - 1;
  return d * d * d * d <= q;
}

bool is_subfield(const BigInt& k, std::uint64_t p, unsigned m) {
  const BigInt q_minus_1 = big_pow(p, m) - 1;
  for (std::uint64_t a : divisors(std::uint64_t{m})) {
    if (a == m) continue;
    if (k * (big_pow(p, a) - 1) == q_minus_1) return true;
  }
  return false;
}

namespace {

std::optional<unsigned> semiprimitive_ell(const BigInt& k, std::uint64_t p, unsigned m) {
  if (k < 2) return std::nullopt;
  if (m % 2 == 0 && k == big_pow(p, m / 2) + 1) return std::nullopt;
  for (std::uint64_t l : divisors(std::uint64_t{m})) {
    if ((m / l) % 2 != 0) continue;
    if ((big_pow(p, l) + 1) % k == 0) return static_cast<unsigned>(l);
  }
  if (k == 2 && p % 2 == 1 && m % 2 == 0) return 0u;
  return std::nullopt;
}

}  // namespace

bool is_semiprimitive(const BigInt& k, std::uint64_t p, unsigned m) {
  return semiprimitive_ell(k, p, m).has_value();
}

const std::vector<ExceptionalPair>& exceptional_pairs() {
  static const std::vector<ExceptionalPair> pairs = {
      {11, 3, 5},   {19, 5, 9},   {35, 3, 13},   {37, 7, 9},
      {43, 11, 7},  {67, 17, 33}, {107, 3, 53},  {133, 5, 18},
      {163, 41, 81}, {323, 3, 144}, {499, 5, 249},
  };
  return pairs;
}

bool is_exceptional(const BigInt& k, std::uint64_t p, unsigned m) {
  for (const auto& e : exceptional_pairs()) {
    if (e.p == p && e.m == m && k == e.k) return true;
  }
  return false;
}

PairClassification classify_pair(const BigInt& k, std::uint64_t p, unsigned m) {
  if (k < 2) throw Error(Errc::kInvalidArgument, "classify_pair requires k >= 2");
  PairClassification out;
  out.small_range = small_range(k, big_pow(p, m));
  if (is_subfield(k, p, m)) {
    out.kind = PairKind::kSubfield;
    for (std::uint64_t a : divisors(std::uint64_t{m})) {
      if (a < m && k * (big_pow(p, a) - 1) == big_pow(p, m) - 1) {
        out.subfield_degree = static_cast<unsigned>(a);
      }
    }
    return out;
  }
  if (is_exceptional(k, p, m)) {
    out.kind = PairKind::kExceptional;
  } else if (const auto ell = semiprimitive_ell(k, p, m)) {
    out.kind = PairKind::kSemiprimitive;
    out.ell = *ell;
  } else if (out.small_range) {
    out.kind = PairKind::kSmallRange;
  }
  out.is_new = (out.kind == PairKind::kExceptional || out.kind == PairKind::kSemiprimitive) &&
               !out.small_range;
  return out;
}

const std::vector<CatalogFamily>& catalog_families() {
  static const std::vector<CatalogFamily> families = [] {
    std::vector<CatalogFamily> out;
    for (const auto& d : family_defs()) out.push_back(d.info);
    return out;
  }();
  return families;
}

std::optional<KnownValue> match_family(const std::string& family_id, const BigInt& k,
                                       std::uint64_t p, unsigned m) {
  const FamilyDef& def = family_def(family_id);
  if (family_id == "kononen1") return match_kononen(false, k, p, m);
  if (family_id == "kononen2") return match_kononen(true, k, p, m);
  if (!def.matcher) return std::nullopt;
  if (k < 1 || (big_pow(p, m) - 1) % k != 0) return std::nullopt;
  if (const auto v = def.matcher(k, p, m)) return make_value(*v, def.source, family_id);
  return std::nullopt;
}

std::optional<KnownValue> known_value(const BigInt& k, std::uint64_t p, unsigned m) {
  if (k < 1 || (big_pow(p, m) - 1) % k != 0 || !waring_exists(k, p, m)) {
    return std::nullopt;
  }
  for (const auto& d : family_defs()) {
    if (auto kv = match_family(d.info.id, k, p, m)) return kv;
  }
  return std::nullopt;
}

const std::vector<ListEntry>& list_entries() {
  static const std::vector<ListEntry> entries = {
      {"small-g4", 6, 7, 1, 4, true, "BFS gives g(6, 7) = 6"},
      {"small-g4", 6, 13, 1, 4, true, "BFS gives g(6, 13) = 6"},
      {"small-g4", 6, 19, 1, 4, false, ""},
      {"small-g4", 7, 29, 1, 4, false, ""},
      {"small-g4", 6, 31, 1, 4, false, ""},
      {"small-g4", 8, 41, 1, 4, false, ""},
      {"small-g4", 10, 41, 1, 4, false, ""},
      {"small-g4", 7, 43, 1, 4, false, ""},
      {"small-g4", 10, 61, 1, 4, false, ""},
      {"small-g4", 11, 89, 1, 4, false, ""},
      {"kononen-g4", 6, 5, 2, 4, true, "g(6, 25) does not exist: 6 = (25-1)/(5-1)"},
      {"kononen-g4", 8, 5, 2, 4, false, ""},
      {"kononen-g4", 5, 3, 4, 4, true, "BFS gives g(5, 81) = 2 (semiprimitive)"},
      {"kononen-g4", 8, 3, 4, 4, true, "BFS gives g(8, 81) = 3, as the second Kononen form"},
      {"kononen-g4", 10, 3, 4, 4, true, "g(10, 81) does not exist: 10 = (81-1)/(9-1)"},
      {"kononen-g4", 12, 3, 4, 4, true, "12 does not divide 80; g(12, 81) = g(4, 81)"},
  };
  return entries;
}

std::vector<ScanRow> family_scan(const std::string& family_id, const ScanRanges& ranges,
                                 std::uint64_t budget) {
  const FamilyDef& def = family_def(family_id);
  std::map<std::tuple<std::uint64_t, unsigned, BigInt>, ScanRow> rows;
  auto emit = [&](const BigInt& k, std::uint64_t p, std::uint64_t m,
                  std::optional<BigInt> value, bool disputed = false,
                  const std::string& note = "") {
    ScanRow row;
    row.k = k;
    row.p = p;
    row.m = static_cast<unsigned>(m);
    row.value = std::move(value);
    row.citation = note.empty() ? def.info.citation : def.info.citation + "; " + note;
    row.bfs_verifiable = big_pow(p, m) <= budget;
    row.disputed = disputed;
    rows.emplace(std::make_tuple(p, row.m, k), std::move(row));
  };
  const auto primes = primes_in(ranges.p_min, ranges.p_max);
  const auto small_primes = primes_in(2, ranges.b_max);

  if (family_id == "trivial") {
    for (auto p : primes) {
      for (std::uint64_t m = 1; m <= ranges.a_max; ++m) emit(1, p, m, BigInt(1));
    }
  } else if (family_id == "small-bound" || family_id == "semiprimitive") {
    const std::uint64_t m_max = family_id == "semiprimitive" ? 2 * ranges.a_max : ranges.a_max;
    for (auto p : primes) {
      for (std::uint64_t m = 1; m <= m_max; ++m) {
        for (const BigInt& k : divisors(big_pow(p, m) - 1)) {
          if (k < 2) continue;
          if (match_family(family_id, k, p, static_cast<unsigned>(m))) {
            emit(k, p, m, BigInt(2));
          }
        }
      }
    }
  } else if (family_id == "exceptional") {
    for (const auto& e : exceptional_pairs()) emit(e.k, e.p, e.m, BigInt(2));
  } else if (family_id == "kononen1" || family_id == "kononen2") {
    const bool second = family_id == "kononen2";
    for (auto p : primes) {
      for (auto r : small_primes) {
        for (unsigned e = 1; e <= ranges.t_max; ++e) {
          try {
            const ClosedForm cf = second ? kononen2(p, r, e) : kononen1(p, r, e);
            const auto m = static_cast<std::uint64_t>(euler_phi(ipow(BigInt(r), e)));
            emit(cf.k, p, m, cf.value);
          } catch (const Error&) {
          }
        }
      }
    }
  } else if (family_id == "hamming" || family_id == "hamming-double") {
    const bool doubled = family_id == "hamming-double";
    for (auto p : primes) {
      if (doubled && p == 2) continue;
      for (std::uint64_t a = 1; a <= ranges.a_max; ++a) {
        for (auto b : small_primes) {
          if (b == p || (doubled && b == 2)) continue;
          if ((big_pow(p, a) - 1) % b != 0) continue;
          const ClosedForm cf = hamming_value(p, a, b);
          emit(doubled ? cf.k * 2 : cf.k, p, a * b, doubled ? BigInt(2 * b) : cf.value);
        }
      }
    }
  } else if (family_id == "safe-prime" || family_id == "square-b") {
    for (auto p : primes) {
      for (auto b : small_primes) {
        if (b == p || (p - 1) % b != 0) continue;
        const std::uint64_t t = (p - 1) / b;
        if (t % b == 0) continue;
        const BigInt k = (big_pow(p, b) - 1) / (b * b);
        if (family_id == "safe-prime") {
          if (b % 2 == 1 && p == 2 * b + 1) emit(k, p, b, BigInt(2 * b));
        } else {
          const auto base = base_waring(BigInt(t), p, 1, budget);
          emit(k, p, b, base ? std::optional<BigInt>(*base * b) : std::nullopt);
        }
      }
    }
  } else if (family_id == "p-minus-1") {
    for (auto p : primes) {
      if (p % 4 == 3 && p >= 7) emit((big_pow(p, 2) - 1) / 4, p, 2, BigInt(p - 1));
    }
  } else if (family_id == "quartic-four") {
    for (auto p : primes) {
      if (p <= 3) continue;
      const BigInt s = big_pow(p, 2) + 1;
      emit(3 * s / 2, p, 4, BigInt(4));
      if ((p % 8 == 3 || p % 8 == 5) && p >= 67) emit(4 * s, p, 4, BigInt(4));
    }
  } else if (family_id == "half-plus-one") {
    for (auto p : primes) {
      if (p == 2) continue;
      for (std::uint64_t a = 1; a <= ranges.a_max; ++a) {
        emit((big_pow(p, a) + 1) / 2, p, 2 * a, BigInt(2));
      }
    }
  } else if (family_id == "binary-hamming") {
    for (std::uint64_t t = 1; t <= ranges.t_max; ++t) {
      for (auto [b, step] : {std::pair<std::uint64_t, std::uint64_t>{3, 2}, {5, 4}, {7, 3}}) {
        const ClosedForm cf = hamming_value(2, step * t, b);
        emit(cf.k, 2, step * t * b, cf.value);
      }
    }
  } else if (family_id == "semiprimitive-h") {
    for (auto p : primes) {
      for (std::uint64_t l = 1; l <= ranges.a_max; ++l) {
        const BigInt s = big_pow(p, l) + 1;
        for (const BigInt& h : divisors(s)) {
          if (h > 1 && h < s) emit(s / h, p, 2 * l, BigInt(2));
        }
      }
    }
  } else if (family_id == "even-power-of-2") {
    for (auto p : primes) {
      if (p == 2) continue;
      for (std::uint64_t a = 1; a <= ranges.a_max; ++a) {
        const BigInt base = big_pow(p, a) - 1;
        if (base % 4 != 0) continue;
        for (const BigInt& u : divisors(base)) {
          if (u % 2 == 0 || !base_has_value_two(u, p, static_cast<unsigned>(a))) continue;
          const BigInt c = base / u;
          for (std::uint64_t t = 1; t <= ranges.t_max; ++t) {
            const std::uint64_t m = a << t;
            emit((big_pow(p, m) - 1) / (c << t), p, m, BigInt(2) << t);
          }
        }
      }
    }
  } else if (family_id == "even-2b") {
    for (auto p : primes) {
      for (std::uint64_t a = 1; a <= ranges.a_max; ++a) {
        const BigInt base = big_pow(p, a) - 1;
        for (std::uint64_t b = 3; b <= ranges.b_max; ++b) {
          if (is_power_of_two(b) || b % p == 0) continue;
          if (a % static_cast<std::uint64_t>(euler_phi(radical(BigInt(b)))) != 0) continue;
          for (const BigInt& u : divisors(base)) {
            if (gcd(u, BigInt(b)) != 1 || !base_has_value_two(u, p, static_cast<unsigned>(a))) {
              continue;
            }
            const BigInt c = base / u;
            emit((big_pow(p, a * b) - 1) / (b * c), p, a * b, BigInt(2 * b));
          }
        }
      }
    }
  } else if (family_id == "quadratic-lift") {
    for (auto p : primes) {
      if (p == 2) continue;
      for (std::uint64_t a = 1; a <= ranges.a_max; ++a) {
        const BigInt base = big_pow(p, a) - 1;
        for (const BigInt& c : divisors(base)) {
          const BigInt u = base / c;
          if (u % 2 == 0 || !is_primitive_divisor(c, BigInt(p), a)) continue;
          const auto g = base_waring(u, p, a, budget);
          emit((big_pow(p, 2 * a) - 1) / (2 * c), p, 2 * a,
               g ? std::optional<BigInt>(*g * 2) : std::nullopt);
        }
      }
    }
  } else if (family_id == "prime-base") {
    for (auto p : primes) {
      for (auto b : small_primes) {
        if (b == p || (p - 1) % b != 0) continue;
        for (std::uint64_t c : divisors(p - 1)) {
          if (((p - 1) / c) % b == 0) continue;
          const auto g = base_waring(BigInt((p - 1) / c), p, 1, budget);
          emit((big_pow(p, b) - 1) / (b * c), p, b,
               g ? std::optional<BigInt>(*g * b) : std::nullopt);
        }
      }
    }
  } else if (family_id == "small-g4" || family_id == "kononen-g4") {
    for (const auto& e : list_entries()) {
      if (e.family != family_id) continue;
      std::optional<BigInt> value = BigInt(e.claimed);
      if (e.disputed) {
        value.reset();
        const BigInt kn = gcd(BigInt(e.k), big_pow(e.p, e.m) - 1);
        if (waring_exists(kn, e.p, e.m) && big_pow(e.p, e.m) <= budget) {
          value = base_waring(kn, e.p, e.m, budget);
        }
      }
      emit(e.k, e.p, e.m, value, e.disputed, e.note);
    }
  }
  std::vector<ScanRow> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace gpw
