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

#ifndef GPW_GPGRAPH_HPP_
#define GPW_GPGRAPH_HPP_

// Generalized Paley graphs Cay(F_q, R_k), exact Waring numbers by BFS, and
// Cartesian decomposition witnesses.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpw/ff.hpp"

namespace gpw {

inline constexpr std::uint64_t kDefaultBfsBudget = std::uint64_t{1} << 20;

class GPGraph {
 public:
  /// Throws kNotNormalized unless k | q - 1.
  GPGraph(FieldPtr field, std::uint64_t k);

  const FieldTable& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::uint64_t k() const { return k_; }
  /// Out-degree (q - 1) / k.
  std::uint64_t n() const { return residues_.size(); }
  std::uint32_t q() const { return field_->q(); }
  const ResidueSet& residues() const { return residues_; }
  /// split() of each residue, in the order of residues().members.
  const std::vector<FieldTable::Split>& residue_splits() const { return splits_; }

 private:
  FieldPtr field_;
  std::uint64_t k_;
  ResidueSet residues_;
  std::vector<FieldTable::Split> splits_;
};

bool is_undirected(const GPGraph& g);
bool is_connected(const GPGraph& g);

enum class Method { kBFS, kReduction, kCatalog };
std::string to_string(Method method);

struct WaringResult {
  /// Absent when g(k, q) does not exist.
  std::optional<std::uint64_t> value;
  Method method = Method::kBFS;
  std::chrono::nanoseconds elapsed{0};

  bool exists() const { return value.has_value(); }
};

struct BfsOutcome {
  /// Largest distance from the source among reached vertices.
  std::uint64_t depth = 0;
  std::uint32_t reached = 0;
};

/// Forward BFS from source. Stops as soon as every vertex is reached.
BfsOutcome bfs_from(const GPGraph& g, std::uint32_t source);

/// Eccentricity of source, or nullopt when some vertex is unreachable.
std::optional<std::uint64_t> eccentricity(const GPGraph& g, std::uint32_t source);

/// g(k, q) as the eccentricity of 0. Throws kBudgetExceeded when q > budget.
WaringResult waring_bfs(const GPGraph& g, std::uint64_t budget = kDefaultBfsBudget);

/// Data showing Gamma(k, p^m) is the Cartesian product of b copies of
/// Gamma(u, p^a), directed when p and n are odd.
struct DecompositionWitness {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t u = 0;
  bool directed = false;
  FieldPtr base_field;  // F_{p^a}
  /// phi(omega_base) = gamma^phi_exponent with gamma = omega^((q-1)/(p^a-1))
  /// is the embedding of the base field as the subfield of order p^a.
  std::uint64_t phi_exponent = 0;
  /// F_p-dimension of the additive span of each coset S_i = C omega^(k i).
  std::vector<unsigned> span_dims;
  unsigned total_rank = 0;
  std::uint64_t arcs_checked = 0;
};

/// Returns a verified witness for the first admissible b (largest b first,
/// i.e. smallest base field), or only for the given b. Precondition: g
/// connected. Throws kWitnessVerificationFailed if an admissible
/// decomposition fails verification.
std::optional<DecompositionWitness> cartesian_decomposition(
    const GPGraph& g, std::optional<std::uint64_t> b = std::nullopt);

/// Re-checks spans, the coordinate bijection and the exhaustive arc-set
/// equality in both directions. Returns the number of arc checks performed
/// (2 q n), or nullopt on failure.
std::optional<std::uint64_t> verify_witness(const GPGraph& g,
                                            const DecompositionWitness& w);

/// waring_bfs(g) == b * waring_bfs(Gamma(u, p^a)).
bool diameter_additivity_check(const DecompositionWitness& w, const GPGraph& g,
                               std::uint64_t budget = kDefaultBfsBudget);

}  // namespace gpw

#endif  // GPW_GPGRAPH_HPP_
