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

#include "gpw/gpgraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "gpw/arith.hpp"
#include "gpw/error.hpp"

namespace gpw {
namespace {

// Row-echelon basis of a subspace of F_p^m.
class EchelonBasis {
 public:
  EchelonBasis(std::uint32_t p, unsigned m) : p_(p), pivots_(m, -1) {}

  void insert(std::vector<std::uint32_t> v) {
    for (unsigned i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (pivots_[i] < 0) {
        const std::uint64_t scale = inverse(v[i]);
        for (auto& x : v) x = static_cast<std::uint32_t>(x * scale % p_);
        pivots_[i] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return;
      }
      const auto& row = rows_[pivots_[i]];
      const std::uint64_t factor = v[i];
      for (unsigned j = i; j < v.size(); ++j) {
        v[j] = static_cast<std::uint32_t>((v[j] + (p_ - factor) * row[j]) % p_);
      }
    }
  }

  unsigned rank() const { return static_cast<unsigned>(rows_.size()); }

 private:
  std::uint64_t inverse(std::uint64_t x) const {
    std::uint64_t result = 1, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = result * x % p_;
      x = x * x % p_;
      e >>= 1;
    }
    return result;
  }

  std::uint64_t p_;
  std::vector<int> pivots_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

std::uint64_t ipow64(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Image of a base-field element in the subfield of order p^a of g's field.
std::uint32_t embed(const FieldTable& f, const FieldTable& base,
                    std::uint64_t phi_exponent, std::uint32_t y) {
  if (y == 0) return 0;
  const std::uint64_t step = (f.q() - 1) / (base.q() - 1);
  return f.exp(step * (phi_exponent * base.log(y) % (base.q() - 1)));
}

std::optional<std::uint64_t> find_embedding(const FieldTable& f,
                                            const FieldTable& base) {
  const std::uint64_t order = base.q() - 1;
  for (std::uint64_t j = 1; j <= std::max<std::uint64_t>(order - 1, 1); ++j) {
    if (std::gcd(j, order) != 1) continue;
    bool additive = true;
    for (std::uint32_t y = 0; y < base.q() && additive; ++y) {
      additive = embed(f, base, j, base.add(1, y)) == f.add(1, embed(f, base, j, y));
    }
    if (additive) return j;
  }
  return std::nullopt;
}

// coords[x] packs the coordinates (y_0, ..., y_{b-1}) of x in base p^a, where
// x = sum_i omega^(k i) phi(y_i). Empty when the map is not a bijection.
std::vector<std::uint32_t> coordinate_map(const GPGraph& g,
                                          const DecompositionWitness& w) {
  const FieldTable& f = g.field();
  const FieldTable& base = *w.base_field;
  const std::uint32_t big_p = base.q();
  std::vector<std::uint32_t> value(f.q());
  value[0] = 0;
  std::uint64_t filled = 1;
  for (std::uint64_t i = 0; i < w.b; ++i) {
    const std::uint32_t scale = f.exp(g.k() * i);
    for (std::uint32_t y = 1; y < big_p; ++y) {
      const std::uint32_t term = f.mul(scale, embed(f, base, w.phi_exponent, y));
      for (std::uint64_t lower = 0; lower < filled; ++lower) {
        value[y * filled + lower] = f.add(term, value[lower]);
      }
    }
    filled *= big_p;
  }
  std::vector<std::uint32_t> coords(f.q(), 0xffffffffu);
  for (std::uint32_t t = 0; t < f.q(); ++t) {
    if (coords[value[t]] != 0xffffffffu) return {};
    coords[value[t]] = t;
  }
  return coords;
}

bool check_spans(const GPGraph& g, DecompositionWitness& w) {
  const FieldTable& f = g.field();
  const std::uint64_t order = f.q() - 1;
  EchelonBasis total(f.p(), f.m());
  w.span_dims.clear();
  for (std::uint64_t i = 0; i < w.b; ++i) {
    EchelonBasis span(f.p(), f.m());
    for (std::uint64_t j = 0; j < w.c; ++j) {
      const std::uint32_t x = f.exp(g.k() * i + order / w.c * j);
      span.insert(f.digits(x));
      total.insert(f.digits(x));
    }
    w.span_dims.push_back(span.rank());
  }
  w.total_rank = total.rank();
  for (unsigned d : w.span_dims) {
    if (d != w.a) return false;
  }
  return w.total_rank == f.m();
}

}  // namespace

GPGraph::GPGraph(FieldPtr field, std::uint64_t k)
    : field_(std::move(field)), k_(k), residues_(power_residues(*field_, k)) {
  splits_.reserve(residues_.size());
  for (std::uint32_t r : residues_.members) splits_.push_back(field_->split(r));
}

bool is_undirected(const GPGraph& g) {
  const std::uint64_t order = g.q() - 1;
  return g.field().p() == 2 || (order / 2) % g.k() == 0;
}

bool is_connected(const GPGraph& g) {
  return is_primitive_divisor(BigInt(g.n()), BigInt(g.field().p()), g.field().m());
}

std::string to_string(Method method) {
  switch (method) {
    case Method::kBFS:
      return "BFS";
    case Method::kReduction:
      return "Reduction";
    case Method::kCatalog:
      return "Catalog";
  }
  return "?";
}

BfsOutcome bfs_from(const GPGraph& g, std::uint32_t source) {
  const FieldTable& f = g.field();
  const std::uint32_t q = f.q();
  std::vector<std::uint64_t> visited((q + 63) / 64, 0);
  visited[source >> 6] |= std::uint64_t{1} << (source & 63);
  std::vector<std::uint32_t> frontier{source}, next;
  BfsOutcome out;
  out.reached = 1;
  const std::span<const std::uint32_t> ys = g.residues().members;
  const std::span<const FieldTable::Split> ys_split = g.residue_splits();
  while (!frontier.empty() && out.reached < q) {
    next.clear();
    for (std::uint32_t x : frontier) {
      f.for_each_sum(x, ys, ys_split, [&](std::uint32_t v) {
        std::uint64_t& word = visited[v >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if ((word & bit) == 0) {
          word |= bit;
          next.push_back(v);
          ++out.reached;
        }
      });
      if (out.reached == q) break;
    }
    if (next.empty()) break;
    ++out.depth;
    frontier.swap(next);
  }
  return out;
}

std::optional<std::uint64_t> eccentricity(const GPGraph& g, std::uint32_t source) {
  const BfsOutcome out = bfs_from(g, source);
  if (out.reached != g.q()) return std::nullopt;
  return out.depth;
}

WaringResult waring_bfs(const GPGraph& g, std::uint64_t budget) {
  if (g.q() > budget) {
    throw Error(Errc::kBudgetExceeded, "q = " + std::to_string(g.q()) +
                                           " exceeds the BFS budget " +
                                           std::to_string(budget));
  }
  const auto start = std::chrono::steady_clock::now();
  WaringResult result;
  result.method = Method::kBFS;
  result.value = eccentricity(g, 0);
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::optional<std::uint64_t> verify_witness(const GPGraph& g,
                                            const DecompositionWitness& w) {
  const FieldTable& f = g.field();
  if (!w.base_field || w.a * w.b != f.m() || w.b * w.c != g.n() ||
      w.base_field->p() != f.p() || w.base_field->m() != w.a) {
    return std::nullopt;
  }
  const FieldTable& base = *w.base_field;
  const std::uint32_t big_p = base.q();
  if ((big_p - 1) % w.c != 0 || (big_p - 1) / w.c != w.u) return std::nullopt;

  DecompositionWitness copy = w;
  if (!check_spans(g, copy)) return std::nullopt;
  const std::vector<std::uint32_t> coords = coordinate_map(g, w);
  if (coords.empty()) return std::nullopt;

  std::vector<char> in_base_residues(big_p, 0);
  for (std::uint32_t r : power_residues(base, w.u).members) in_base_residues[r] = 1;

  // Forward: every arc x -> x + r changes exactly one coordinate by an
  // element of R_u.
  std::uint64_t arcs = 0;
  bool ok = true;
  const std::span<const std::uint32_t> ys = g.residues().members;
  const std::span<const FieldTable::Split> ys_split = g.residue_splits();
  if (f.p() == 2) {
    // Coordinates are a-bit blocks and subtraction is XOR.
    const unsigned width = static_cast<unsigned>(w.a);
    for (std::uint32_t x = 0; x < f.q() && ok; ++x) {
      const std::uint32_t tx = coords[x];
      f.for_each_sum(x, ys, ys_split, [&](std::uint32_t y) {
        const std::uint32_t d = tx ^ coords[y];
        if (d == 0) {
          ok = false;
        } else {
          const unsigned shift = (31 - static_cast<unsigned>(std::countl_zero(d))) / width * width;
          if ((d & ((std::uint32_t{1} << shift) - 1)) != 0 || !in_base_residues[d >> shift]) {
            ok = false;
          }
        }
        ++arcs;
      });
    }
  } else {
    std::vector<std::uint32_t> digits(std::size_t{f.q()} * w.b);
    for (std::uint32_t x = 0; x < f.q(); ++x) {
      std::uint32_t t = coords[x];
      for (std::uint64_t i = 0; i < w.b; ++i, t /= big_p) digits[x * w.b + i] = t % big_p;
    }
    for (std::uint32_t x = 0; x < f.q() && ok; ++x) {
      const std::uint32_t* dx = &digits[x * w.b];
      f.for_each_sum(x, ys, ys_split, [&](std::uint32_t y) {
        const std::uint32_t* dy = &digits[y * w.b];
        unsigned changed = 0;
        for (std::uint64_t i = 0; i < w.b; ++i) {
          if (dx[i] != dy[i]) {
            ++changed;
            if (!in_base_residues[base.sub(dy[i], dx[i])]) ok = false;
          }
        }
        if (changed != 1) ok = false;
        ++arcs;
      });
    }
  }
  const std::uint64_t product_arcs =
      std::uint64_t{f.q()} * w.b * ((big_p - 1) / w.u);
  if (!ok || arcs != std::uint64_t{f.q()} * g.n() || arcs != product_arcs) {
    return std::nullopt;
  }

  // Backward: every product arc pulls back to an arc of the graph.
  std::vector<std::uint32_t> inverse(f.q());
  for (std::uint32_t x = 0; x < f.q(); ++x) inverse[coords[x]] = x;
  std::vector<char> in_residues(f.q(), 0);
  for (std::uint32_t r : ys) in_residues[r] = 1;
  const std::vector<std::uint32_t> base_residues = power_residues(base, w.u).members;
  std::uint64_t back = 0;
  if (f.p() == 2) {
    for (std::uint32_t x = 0; x < f.q(); ++x) {
      const std::uint32_t tx = coords[x];
      for (std::uint64_t i = 0; i < w.b; ++i) {
        for (std::uint32_t s : base_residues) {
          const std::uint32_t ty = tx ^ (s << (i * w.a));
          if (!in_residues[inverse[ty] ^ x]) return std::nullopt;
        }
      }
      back += w.b * base_residues.size();
    }
  }
  for (std::uint32_t x = 0; x < f.q() && f.p() != 2; ++x) {
    const std::uint32_t tx = coords[x];
    std::uint32_t place = 1;
    for (std::uint64_t i = 0; i < w.b; ++i, place *= big_p) {
      const std::uint32_t digit = tx / place % big_p;
      for (std::uint32_t s : base_residues) {
        const std::uint32_t ty = tx - digit * place + base.add(digit, s) * place;
        if (!in_residues[f.sub(inverse[ty], x)]) return std::nullopt;
        ++back;
      }
    }
  }
  if (back != product_arcs) return std::nullopt;
  return arcs + back;
}

std::optional<DecompositionWitness> cartesian_decomposition(
    const GPGraph& g, std::optional<std::uint64_t> only_b) {
  const FieldTable& f = g.field();
  const unsigned m = f.m();
  const std::uint64_t n = g.n();
  std::vector<std::uint64_t> bs = divisors(std::uint64_t{m});
  std::reverse(bs.begin(), bs.end());
  for (std::uint64_t b : bs) {
    if (b <= 1 || n % b != 0) continue;
    if (only_b && *only_b != b) continue;
    const std::uint64_t c = n / b;
    const std::uint64_t a = m / b;
    if (c <= 1 || !is_primitive_divisor(BigInt(c), BigInt(f.p()), a)) continue;

    DecompositionWitness w;
    w.a = a;
    w.b = b;
    w.c = c;
    w.u = (ipow64(f.p(), a) - 1) / c;
    w.directed = f.p() % 2 == 1 && n % 2 == 1;
    w.base_field = build_field(f.p(), static_cast<unsigned>(a));
    const auto j = find_embedding(f, *w.base_field);
    if (!j) {
      throw Error(Errc::kWitnessVerificationFailed, "no subfield embedding found");
    }
    w.phi_exponent = *j;
    if (!check_spans(g, w)) {
      throw Error(Errc::kWitnessVerificationFailed,
                  "coset spans do not form a direct sum decomposition");
    }
    const auto arcs = verify_witness(g, w);
    if (!arcs) {
      throw Error(Errc::kWitnessVerificationFailed,
                  "arc sets of the graph and the product differ");
    }
    w.arcs_checked = *arcs;
    return w;
  }
  return std::nullopt;
}

bool diameter_additivity_check(const DecompositionWitness& w, const GPGraph& g,
                               std::uint64_t budget) {
  const WaringResult whole = waring_bfs(g, budget);
  const WaringResult factor = waring_bfs(GPGraph(w.base_field, w.u), budget);
  if (!whole.exists() || !factor.exists()) return false;
  return *whole.value == w.b * *factor.value;
}

}  // namespace gpw
