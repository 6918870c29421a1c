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

#ifndef GPW_FF_HPP_
#define GPW_FF_HPP_

// Materialized finite fields F_{p^m} with log/exp tables.
//
// Elements are encoded as integers in [0, q): the coefficient vector
// (c_0, ..., c_{m-1}) of a polynomial in F_p[x]/(f) packs to
// c_0 + c_1 p + ... + c_{m-1} p^{m-1}. Zero encodes 0 and 1 encodes 1.

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace gpw {

inline constexpr std::uint64_t kDefaultFieldBudget = std::uint64_t{1} << 22;

struct FieldSpec {
  std::uint32_t p = 0;
  unsigned m = 0;
  /// Coefficients c_0..c_{m-1} of the monic modulus x^m + sum c_i x^i.
  std::vector<std::uint32_t> modulus;
};

class FieldTable;
using FieldPtr = std::shared_ptr<const FieldTable>;

/// Builds F_{p^m}. The modulus is the monic irreducible polynomial whose
/// coefficient vector, read as a base-p integer, is smallest; omega is the
/// generator of F_q^* with smallest encoding. Throws kInvalidPrime or
/// kBudgetExceeded.
FieldPtr build_field(std::uint64_t p, unsigned m,
                     std::uint64_t budget = kDefaultFieldBudget);

class FieldTable {
 public:
  static constexpr std::size_t kMaxChunks = 8;
  /// An element cut into fixed-width groups of base-p digits; see add_split.
  using Split = std::array<std::uint32_t, kMaxChunks>;

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  unsigned m() const { return spec_.m; }
  std::uint32_t q() const { return q_; }
  std::uint32_t omega() const { return omega_; }

  std::span<const std::uint32_t> exp_table() const { return exp_; }
  /// log_table()[0] holds a sentinel and is not a logarithm.
  std::span<const std::uint32_t> log_table() const { return log_; }

  std::uint32_t exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }
  std::uint32_t log(std::uint32_t x) const { return log_[x]; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg(std::uint32_t x) const;
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const {
    return add(x, neg(y));
  }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    if (x == 0 || y == 0) return 0;
    std::uint32_t e = log_[x] + log_[y];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  std::uint32_t inv(std::uint32_t x) const;
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;

  std::uint32_t digit(std::uint32_t x, unsigned i) const;
  std::vector<std::uint32_t> digits(std::uint32_t x) const;
  std::uint32_t from_digits(std::span<const std::uint32_t> digits) const;

  Split split(std::uint32_t x) const;
  std::uint32_t add_split(const Split& x, const Split& y) const;

  /// Calls fn(x + y) for every y in ys. ys_split must hold split(y) in the
  /// same order; it is ignored for characteristic 2 and prime fields.
  template <typename Fn>
  void for_each_sum(std::uint32_t x, std::span<const std::uint32_t> ys,
                    std::span<const Split> ys_split, Fn&& fn) const;

 private:
  enum class AddKind { kBinary, kPrime, kChunkTable, kDigit };

  friend FieldPtr build_field(std::uint64_t, unsigned, std::uint64_t);
  FieldTable() = default;
  void init_addition();

  FieldSpec spec_;
  std::uint32_t q_ = 0;
  std::uint32_t omega_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;

  AddKind kind_ = AddKind::kPrime;
  unsigned chunks_ = 0;
  std::uint32_t chunk_base_ = 0;  // p^(digits per chunk)
  std::array<std::uint32_t, kMaxChunks> chunk_pow_{};
  std::vector<std::uint32_t> chunk_sum_;  // chunk_base_^2 entries
  std::vector<std::uint32_t> pow_p_;      // p^i, i <= m
};

std::uint32_t elem_add(const FieldTable& f, std::uint32_t x, std::uint32_t y);
std::uint32_t elem_mul(const FieldTable& f, std::uint32_t x, std::uint32_t y);

/// R_k = { x^k : x in F_q^* }, sorted.
struct ResidueSet {
  std::uint64_t k = 0;
  std::vector<std::uint32_t> members;

  std::size_t size() const { return members.size(); }
  bool contains(std::uint32_t x) const;
};

/// Throws kNotNormalized unless k | q - 1.
ResidueSet power_residues(const FieldTable& f, std::uint64_t k);

// -- implementation ---------------------------------------------------------

template <typename Fn>
void FieldTable::for_each_sum(std::uint32_t x, std::span<const std::uint32_t> ys,
                              std::span<const Split> ys_split, Fn&& fn) const {
  switch (kind_) {
    case AddKind::kBinary:
      for (std::uint32_t y : ys) fn(x ^ y);
      return;
    case AddKind::kPrime: {
      const std::uint32_t p = spec_.p;
      for (std::uint32_t y : ys) {
        const std::uint32_t s = x + y;
        fn(s >= p ? s - p : s);
      }
      return;
    }
    case AddKind::kChunkTable: {
      const Split xs = split(x);
      const std::uint32_t* table = chunk_sum_.data();
      for (const Split& ysp : ys_split) {
        std::uint32_t v = 0;
        for (unsigned j = 0; j < chunks_; ++j) {
          v += table[xs[j] * chunk_base_ + ysp[j]] * chunk_pow_[j];
        }
        fn(v);
      }
      return;
    }
    case AddKind::kDigit: {
      const Split xs = split(x);
      const std::uint32_t p = spec_.p;
      for (const Split& ysp : ys_split) {
        std::uint32_t v = 0;
        for (unsigned j = 0; j < chunks_; ++j) {
          std::uint32_t s = xs[j] + ysp[j];
          if (s >= p) s -= p;
          v += s * chunk_pow_[j];
        }
        fn(v);
      }
      return;
    }
  }
}

}  // namespace gpw

#endif  // GPW_FF_HPP_
