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

#ifndef GPW_CLASSIFY_HPP_
#define GPW_CLASSIFY_HPP_

// Pair classification (subfield, semiprimitive, exceptional, small range)
// and the catalog of known Waring numbers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpw/arith.hpp"

namespace gpw {

/// How the base of a certificate, or a catalog value, was established.
enum class BaseSource {
  kTrivial,
  kBFS,
  kSmallBound,
  kSemiprimitive,
  kExceptional,
  kKononen1,
  kKononen2,
  kCatalogEntry,
  kUnresolved,
};

std::string to_string(BaseSource source);

enum class PairKind {
  kSubfield,
  kSemiprimitive,
  kExceptional,
  kSmallRange,
  kUnclassified,
};

std::string to_string(PairKind kind);

struct PairClassification {
  PairKind kind = PairKind::kUnclassified;
  /// Exceptional or semiprimitive, and outside the small range.
  bool is_new = false;
  bool small_range = false;
  /// For kSubfield: the a < m with k = (p^m - 1)/(p^a - 1).
  std::optional<unsigned> subfield_degree;
  /// For kSemiprimitive: smallest l | m with m/l even and k | p^l + 1
  /// (0 for the k = 2 case not covered by such an l).
  std::optional<unsigned> ell;
};

/// Precondition k >= 2. Precedence Subfield > Exceptional > Semiprimitive >
/// SmallRange.
PairClassification classify_pair(const BigInt& k, std::uint64_t p, unsigned m);

/// (k - 1)^4 <= q.
bool small_range(const BigInt& k, const BigInt& q);

/// The semiprimitive predicate alone, without precedence.
bool is_semiprimitive(const BigInt& k, std::uint64_t p, unsigned m);
bool is_subfield(const BigInt& k, std::uint64_t p, unsigned m);

struct ExceptionalPair {
  std::uint64_t k;
  std::uint64_t p;
  unsigned m;
};

/// The eleven sporadic two-weight pairs, ascending by k.
const std::vector<ExceptionalPair>& exceptional_pairs();
bool is_exceptional(const BigInt& k, std::uint64_t p, unsigned m);

struct KnownValue {
  BigInt value;
  BaseSource source = BaseSource::kCatalogEntry;
  std::string family;
  std::string citation;
};

/// First match in catalog order: trivial, small range, semiprimitive,
/// exceptional, Kononen, closed-form families, list entries. k must be
/// normalized. Disputed entries are never returned.
std::optional<KnownValue> known_value(const BigInt& k, std::uint64_t p, unsigned m);

struct CatalogFamily {
  std::string id;
  std::string predicate;
  std::string value;
  std::string citation;
};

const std::vector<CatalogFamily>& catalog_families();

/// Evaluates one family's predicate on (k, p^m). Throws kUnknownFamily.
/// Families without a closed form never match.
std::optional<KnownValue> match_family(const std::string& family_id,
                                       const BigInt& k, std::uint64_t p,
                                       unsigned m);

/// Individually listed values, some of them disputed.
struct ListEntry {
  std::string family;
  std::uint64_t k;
  std::uint64_t p;
  unsigned m;
  /// Value as claimed in the source list.
  std::uint64_t claimed;
  bool disputed;
  std::string note;
};

const std::vector<ListEntry>& list_entries();

struct ScanRanges {
  std::uint64_t p_min = 2;
  std::uint64_t p_max = 50;
  /// Bound on the base degree a (or l).
  std::uint64_t a_max = 3;
  /// Bound on t in 2^t-type families and the binary family.
  std::uint64_t t_max = 2;
  /// Bound on b in families with a free b.
  std::uint64_t b_max = 13;
};

struct ScanRow {
  BigInt k;
  std::uint64_t p = 0;
  unsigned m = 0;
  /// Absent when the formula needs a base value that is not available.
  std::optional<BigInt> value;
  std::string citation;
  bool bfs_verifiable = false;
  bool disputed = false;
};

/// Instances of a family, ordered by (p, m, k). Throws kUnknownFamily.
std::vector<ScanRow> family_scan(const std::string& family_id,
                                 const ScanRanges& ranges,
                                 std::uint64_t budget = std::uint64_t{1} << 20);

}  // namespace gpw

#endif  // GPW_CLASSIFY_HPP_
