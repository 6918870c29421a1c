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

#include "gpw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "gpw/arith.hpp"
#include "gpw/classify.hpp"
#include "gpw/error.hpp"
#include "gpw/ff.hpp"
#include "gpw/gpgraph.hpp"
#include "gpw/reduction.hpp"

namespace gpw {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

const CheckResult* SuiteReport::find(const std::string& check) const {
  for (const CheckResult& c : checks) {
    if (c.name == check) return &c;
  }
  return nullptr;
}

namespace {

constexpr std::size_t kMaxListed = 50;

using Clock = std::chrono::steady_clock;

// Thread-safe accumulation of check results, in declaration order.
class Recorder {
 public:
  explicit Recorder(std::vector<std::string> names) {
    for (std::string& n : names) {
      checks_.push_back({});
      checks_.back().name = std::move(n);
    }
  }

  void pass(const std::string& name, std::uint64_t count = 1) {
    std::lock_guard lock(mu_);
    at(name).checked += count;
  }

  void fail(const std::string& name, const std::string& message) {
    std::lock_guard lock(mu_);
    CheckResult& c = at(name);
    ++c.checked;
    ++c.violations;
    if (c.failures.size() < kMaxListed) c.failures.push_back(message);
  }

  void expect(const std::string& name, bool ok, const std::string& message) {
    if (ok) {
      pass(name);
    } else {
      fail(name, message);
    }
  }

  void note(std::string text) {
    std::lock_guard lock(mu_);
    notes_.push_back(std::move(text));
  }

  SuiteReport finish(std::string suite, std::uint64_t max_q, Clock::time_point start) {
    SuiteReport r;
    r.suite = std::move(suite);
    r.max_q = max_q;
    r.checks = std::move(checks_);
    r.notes = std::move(notes_);
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return r;
  }

 private:
  CheckResult& at(const std::string& name) {
    for (CheckResult& c : checks_) {
      if (c.name == name) return c;
    }
    checks_.push_back({});
    checks_.back().name = name;
    return checks_.back();
  }

  std::mutex mu_;
  std::vector<CheckResult> checks_;
  std::vector<std::string> notes_;
};

unsigned thread_count(const VerifyOptions& o) {
  if (o.threads > 0) return o.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(i) for i in [0, n) on a fixed pool. Exceptions are reported
// through on_error and do not stop the other tasks.
template <class Fn, class OnError>
void parallel_for(std::size_t n, unsigned threads, Fn fn, OnError on_error) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (const std::exception& e) {
        on_error(i, e.what());
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned extra = std::min<std::size_t>(threads, n) > 0
                             ? static_cast<unsigned>(std::min<std::size_t>(threads, n)) - 1
                             : 0;
  for (unsigned t = 0; t < extra; ++t) pool.emplace_back(worker);
  worker();
}

std::string pair_name(std::uint64_t k, std::uint64_t p, unsigned m) {
  std::ostringstream os;
  os << "g(" << k << ", " << p << "^" << m << ")";
  return os.str();
}

std::string show(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

struct FieldOrder {
  std::uint64_t p;
  unsigned m;
  std::uint64_t q;
};

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<char> composite(n + 1, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
  }
  return out;
}

std::vector<FieldOrder> prime_powers_up_to(std::uint64_t max_q) {
  std::vector<FieldOrder> out;
  for (std::uint64_t p : primes_up_to(max_q)) {
    std::uint64_t q = p;
    for (unsigned m = 1; q <= max_q; ++m, q *= p) out.push_back({p, m, q});
  }
  std::sort(out.begin(), out.end(),
            [](const FieldOrder& x, const FieldOrder& y) { return x.q < y.q; });
  return out;
}

std::uint64_t pow64(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::uint64_t order_mod(std::uint64_t x, std::uint64_t n) {
  if (n == 1) return 1;
  std::uint64_t y = x % n, ord = 1;
  while (y != 1) {
    y = y * x % n;
    ++ord;
  }
  return ord;
}

// Memoized BFS values. Fields are cached too, so only use it where the set
// of fields stays small.
class BfsOracle {
 public:
  explicit BfsOracle(std::uint64_t budget) : budget_(budget) {}

  FieldPtr field(std::uint64_t p, unsigned m) {
    std::shared_future<FieldPtr> fut;
    std::promise<FieldPtr> promise;
    bool owner = false;
    {
      std::lock_guard lock(mu_);
      auto [it, inserted] = fields_.try_emplace({p, m});
      if (inserted) {
        it->second = promise.get_future().share();
        owner = true;
      }
      fut = it->second;
    }
    if (owner) {
      try {
        promise.set_value(build_field(p, m, budget_));
      } catch (...) {
        promise.set_exception(std::current_exception());
      }
    }
    return fut.get();
  }

  std::optional<std::uint64_t> waring(std::uint64_t p, unsigned m, std::uint64_t k) {
    using Result = std::optional<std::uint64_t>;
    std::shared_future<Result> fut;
    std::promise<Result> promise;
    bool owner = false;
    {
      std::lock_guard lock(mu_);
      auto [it, inserted] = values_.try_emplace({p, m, k});
      if (inserted) {
        it->second = promise.get_future().share();
        owner = true;
      }
      fut = it->second;
    }
    if (owner) {
      try {
        promise.set_value(waring_bfs(GPGraph(field(p, m), k), budget_).value);
      } catch (...) {
        promise.set_exception(std::current_exception());
      }
    }
    return fut.get();
  }

 private:
  std::uint64_t budget_;
  std::mutex mu_;
  std::map<std::pair<std::uint64_t, unsigned>, std::shared_future<FieldPtr>> fields_;
  std::map<std::tuple<std::uint64_t, unsigned, std::uint64_t>,
           std::shared_future<std::optional<std::uint64_t>>>
      values_;
};

std::uint64_t resolve_max_q(const std::string& suite, const VerifyOptions& o) {
  const std::uint64_t max_q = o.max_q ? o.max_q : default_max_q(suite);
  if (max_q > o.budget) {
    throw Error(Errc::kInvalidArgument,
                "max_q " + std::to_string(max_q) + " exceeds the BFS budget " +
                    std::to_string(o.budget));
  }
  return max_q;
}

bool is_prime_power_of(std::uint64_t b, std::uint64_t r, unsigned& t) {
  t = 0;
  while (b > 1 && b % r == 0) {
    b /= r;
    ++t;
  }
  return b == 1 && t > 0;
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteReport verify_reduction(const VerifyOptions& options) {
  const auto start = Clock::now();
  const std::uint64_t max_q = resolve_max_q("reduction", options);
  Recorder rec({"oracle", "psi-form", "specialized-implies-main", "b-prime-iff",
                "k-identity", "witness", "certificate", "winterhof"});

  struct Instance {
    std::uint64_t p, a, b, c;
  };
  std::vector<Instance> instances;
  for (std::uint64_t p : primes_up_to(max_q)) {
    if (p * p > max_q) break;
    for (std::uint64_t a = 1; pow64(p, 2 * a) <= max_q; ++a) {
      const std::vector<std::uint64_t> cs = divisors(pow64(p, a) - 1);
      for (std::uint64_t b = 2; pow64(p, a * b) <= max_q; ++b) {
        for (std::uint64_t c : cs) instances.push_back({p, a, b, c});
      }
    }
  }

  BfsOracle oracle(options.budget);
  std::atomic<std::uint64_t> applicable{0}, witness_arcs{0};
  parallel_for(
      instances.size(), thread_count(options),
      [&](std::size_t i) {
        const auto [p, a, b, c] = instances[i];
        const unsigned m = static_cast<unsigned>(a * b);
        const BigInt cb(c);
        const bool main = check_main_conditions(p, a, b, cb);
        std::ostringstream id;
        id << "p=" << p << " a=" << a << " b=" << b << " c=" << c;

        rec.expect("psi-form", main == check_main_conditions_psi(p, a, b, cb), id.str());
        for (Rule r : {Rule::kBPrime, Rule::kBPowerOf2, Rule::kBPrimePower,
                       Rule::kGeneralB, Rule::kRadPhiCorollary}) {
          if (check_rule(r, p, a, b, cb)) {
            rec.expect("specialized-implies-main", main, id.str() + " rule " + to_string(r));
          }
        }
        if (p <= 13 && is_prime(b)) {
          rec.expect("b-prime-iff", main == check_b_prime(p, a, b, cb), id.str());
        }
        if (!main) return;
        ++applicable;

        const std::uint64_t q = pow64(p, m);
        const std::uint64_t base_q = pow64(p, a);
        const std::uint64_t k = (q - 1) / (b * c);
        const std::uint64_t u = (base_q - 1) / c;
        const std::vector<Decomposition> decs = enumerate_decompositions(BigInt(k), p, m);
        const Decomposition expected{a, b, cb, BigInt(u)};
        rec.expect("k-identity",
                   k * b * c == q - 1 && u * c == base_q - 1 &&
                       (c == 1 || std::find(decs.begin(), decs.end(), expected) != decs.end()),
                   id.str());

        const auto whole = oracle.waring(p, m, k);
        const auto factor = oracle.waring(p, static_cast<unsigned>(a), u);
        const std::optional<std::uint64_t> scaled =
            factor ? std::optional<std::uint64_t>(b * *factor) : std::nullopt;
        rec.expect("oracle", whole && scaled && *whole == *scaled,
                   id.str() + ": " + pair_name(k, p, m) + " = " + show(whole) + ", b * " +
                       pair_name(u, p, static_cast<unsigned>(a)) + " = " + show(scaled));

        if (c > 1) {
          const GPGraph g(oracle.field(p, m), k);
          const auto w = cartesian_decomposition(g, b);
          const bool ok = w && w->a == a && w->b == b && w->c == c && w->u == u &&
                          w->arcs_checked == 2 * std::uint64_t{g.q()} * g.n();
          if (w) witness_arcs += w->arcs_checked;
          rec.expect("witness", ok, id.str());
        }

        const Certificate cert = reduce(BigInt(k), p, m, options.budget);
        const ReplayResult rr = replay(cert, options.budget);
        rec.expect("certificate",
                   rr.ok && cert.value && whole && *cert.value == BigInt(*whole),
                   id.str() + ": " + (rr.ok ? "value mismatch" : rr.message));

        if (whole) {
          const std::uint64_t n = b * c;
          const std::uint64_t k1 = (p - 1) / std::gcd(n, p - 1);
          const auto bound = oracle.waring(p, 1, k1);
          rec.expect("winterhof", bound && *whole <= m * *bound,
                     id.str() + ": " + show(whole) + " > " + std::to_string(m) + " * " +
                         show(bound));
        }
      },
      [&](std::size_t i, const char* what) {
        const auto [p, a, b, c] = instances[i];
        std::ostringstream os;
        os << "p=" << p << " a=" << a << " b=" << b << " c=" << c << ": exception " << what;
        rec.fail("oracle", os.str());
      });

  rec.note(std::to_string(instances.size()) + " (p, a, b, c) tuples enumerated, " +
           std::to_string(applicable.load()) + " satisfy the main conditions");
  rec.note(std::to_string(witness_arcs.load()) + " witness arc checks");
  return rec.finish("reduction", max_q, start);
}

// ---------------------------------------------------------------------------

SuiteReport verify_psi(const VerifyOptions& /*options*/) {
  const auto start = Clock::now();
  Recorder rec({"power-congruence", "non-divisibility", "periodicity", "factor-identity",
                "primitive-power", "order-criterion"});

  struct Modulus {
    std::uint64_t r;
    unsigned t;
  };
  std::vector<Modulus> moduli;
  for (unsigned t = 1; t <= 4; ++t) moduli.push_back({3, t});
  for (unsigned t = 1; t <= 4; ++t) moduli.push_back({5, t});
  for (unsigned t = 1; t <= 3; ++t) moduli.push_back({7, t});

  auto psi = [](std::uint64_t s, std::uint64_t x, std::uint64_t n) {
    return static_cast<std::uint64_t>(psi_mod(s, BigInt(x), BigInt(n)));
  };

  for (const auto [r, t] : moduli) {
    const std::uint64_t n = pow64(r, t);
    for (std::uint64_t beta = 1; beta < n; ++beta) {
      if (beta % r == 0) continue;
      const std::uint64_t ord = order_mod(beta, n);
      unsigned h = 0;
      const bool admissible = is_prime_power_of(ord, r, h) || ord == 1;
      std::ostringstream id;
      id << "r=" << r << " t=" << t << " beta=" << beta;

      // Order criterion: r^t | Psi_{r^t}(x) iff ord is r^h with h <= t - 1.
      if (t <= 3 && r <= 5) {
        const bool divides = psi(n, beta, n) == 0;
        const bool small_order = admissible && h <= t - 1;
        rec.expect("order-criterion", divides == small_order, id.str());
      }
      if (!admissible) continue;
      const std::uint64_t rh = pow64(r, h);
      std::uint64_t local = 0;

      if (2 * h <= t) {
        rec.expect("power-congruence", psi(rh, beta, n) == rh % n, id.str());
        for (std::uint64_t l = 1; l <= n; ++l) {
          if (l % rh == 0) continue;
          if (psi(l, beta, rh) == 0) {
            rec.fail("non-divisibility", id.str() + " l=" + std::to_string(l));
          } else {
            ++local;
          }
        }
        rec.pass("non-divisibility", local);
        local = 0;
      }

      const std::uint64_t psi_rh = psi(rh, beta, n);
      for (std::uint64_t e = 0; e <= pow64(r, t - h) + 1; ++e) {
        for (std::uint64_t l = 1; l < rh; ++l) {
          const std::uint64_t lhs = psi(e * rh + l, beta, n);
          const std::uint64_t rhs = (e % n * psi_rh + psi(l, beta, n)) % n;
          if (lhs != rhs) {
            rec.fail("periodicity", id.str() + " e=" + std::to_string(e) +
                                        " l=" + std::to_string(l));
          } else {
            ++local;
          }
        }
      }
      rec.pass("periodicity", local);
      local = 0;

      if (h <= t - 1) {
        for (std::uint64_t s = 1; s < n; ++s) {
          if (psi(s, beta, n) == 0) {
            rec.fail("primitive-power", id.str() + " s=" + std::to_string(s));
          } else {
            ++local;
          }
        }
        rec.pass("primitive-power", local);
        local = 0;
      }
    }

    // The factor identity is exact, so check it for every unit.
    std::uint64_t local = 0;
    for (std::uint64_t beta = 1; beta < n; ++beta) {
      if (beta % r == 0) continue;
      for (std::uint64_t a = 1; a <= 16; ++a) {
        for (std::uint64_t b = 1; b <= 16; ++b) {
          if (psi_factor_identity_check(a, b, BigInt(beta), BigInt(n))) {
            ++local;
          } else {
            std::ostringstream os;
            os << "r=" << r << " t=" << t << " beta=" << beta << " a=" << a << " b=" << b;
            rec.fail("factor-identity", os.str());
          }
        }
      }
    }
    rec.pass("factor-identity", local);
  }
  rec.note("moduli r^t for r = 3, 5 (t <= 4) and r = 7 (t <= 3)");
  return rec.finish("psi", 0, start);
}

// ---------------------------------------------------------------------------

SuiteReport verify_decomposition(const VerifyOptions& options) {
  const auto start = Clock::now();
  const std::uint64_t max_q = resolve_max_q("decomposition", options);
  Recorder rec({"named-witness", "agreement", "additivity"});

  {
    const GPGraph g(build_field(3, 2), 2);
    const auto w = cartesian_decomposition(g);
    rec.expect("named-witness",
               w && w->a == 1 && w->b == 2 && w->c == 2 && w->u == 1 && !w->directed &&
                   w->arcs_checked == 2 * 9 * 4 && diameter_additivity_check(*w, g),
               "Gamma(2, 9) is not the square of K_3");
  }
  {
    const GPGraph g(build_field(7, 3), 38);
    const auto w = cartesian_decomposition(g);
    const bool ok = w && w->a == 1 && w->b == 3 && w->c == 3 && w->u == 2 && w->directed &&
                    w->arcs_checked == 343 * 18 && diameter_additivity_check(*w, g);
    rec.expect("named-witness", ok, "Gamma(38, 343) is not the directed cube of Gamma(2, 7)");
    if (w) {
      rec.note("Gamma(38, 343): " + std::to_string(w->arcs_checked) + " arc checks");
    }
  }
  {
    const GPGraph g(build_field(7, 1), 2);
    rec.expect("named-witness", !cartesian_decomposition(g),
               "Gamma(2, 7) reported decomposable");
  }

  const std::vector<FieldOrder> fields = prime_powers_up_to(max_q);
  std::atomic<std::uint64_t> witnesses{0};
  parallel_for(
      fields.size(), thread_count(options),
      [&](std::size_t i) {
        const auto [p, m, q] = fields[i];
        if (m == 1) return;
        const FieldPtr f = build_field(p, m, options.budget);
        for (std::uint64_t k : divisors(q - 1)) {
          if (!waring_exists(BigInt(k), p, m)) continue;
          const GPGraph g(f, k);
          std::vector<std::uint64_t> expected;
          for (const Decomposition& d : enumerate_decompositions(BigInt(k), p, m)) {
            expected.push_back(d.b);
          }
          std::vector<std::uint64_t> found;
          for (std::uint64_t b : divisors(std::uint64_t{m})) {
            if (b < 2) continue;
            const auto w = cartesian_decomposition(g, b);
            if (!w) continue;
            found.push_back(b);
            ++witnesses;
            rec.expect("additivity", diameter_additivity_check(*w, g, options.budget),
                       pair_name(k, p, m) + " b=" + std::to_string(b));
          }
          std::sort(expected.begin(), expected.end());
          rec.expect("agreement", expected == found, pair_name(k, p, m));
        }
      },
      [&](std::size_t i, const char* what) {
        rec.fail("agreement", "q=" + std::to_string(fields[i].q) + ": exception " + what);
      });
  rec.note(std::to_string(witnesses.load()) + " witnesses verified");
  return rec.finish("decomposition", max_q, start);
}

// ---------------------------------------------------------------------------

SuiteReport verify_existence(const VerifyOptions& options) {
  const auto start = Clock::now();
  const std::uint64_t max_q = resolve_max_q("existence", options);
  Recorder rec({"existence-iff-coverage", "connected-iff-primitive", "symmetry",
                "transitivity", "normalization"});
  constexpr std::uint64_t kTransitivityMaxQ = 2401;
  constexpr std::uint64_t kNormalizationMaxQ = 729;
  const std::vector<FieldOrder> fields = prime_powers_up_to(max_q);
  std::atomic<std::uint64_t> pairs{0};
  parallel_for(
      fields.size(), thread_count(options),
      [&](std::size_t i) {
        const auto [p, m, q] = fields[i];
        const FieldPtr f = build_field(p, m, options.budget);
        for (std::uint64_t k : divisors(q - 1)) {
          ++pairs;
          const GPGraph g(f, k);
          const std::uint64_t n = (q - 1) / k;
          const BfsOutcome out = bfs_from(g, 0);
          const bool covered = out.reached == q;
          const std::string id = pair_name(k, p, m);
          rec.expect("existence-iff-coverage", covered == waring_exists(BigInt(k), p, m),
                     id);
          rec.expect("connected-iff-primitive",
                     is_connected(g) == covered && covered == (order_mod(p, n) == m), id);
          rec.expect("symmetry", is_undirected(g) == (p == 2 || n % 2 == 0), id);
          if (q <= kTransitivityMaxQ && covered) {
            std::mt19937_64 rng(q * 1000003 + k);
            std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q - 1));
            bool same = true;
            for (int s = 0; s < 16 && same; ++s) {
              same = eccentricity(g, pick(rng)) == std::optional(out.depth);
            }
            rec.expect("transitivity", same, id);
          }
        }
        if (q <= kNormalizationMaxQ) {
          // {x^k} equals R_gcd(k, q-1) as a set for every k <= q - 1, so the
          // graphs and their Waring numbers coincide.
          std::vector<char> mark(q);
          for (std::uint64_t k = 1; k < q; ++k) {
            std::fill(mark.begin(), mark.end(), 0);
            std::uint64_t distinct = 0;
            for (std::uint32_t x = 1; x < q; ++x) {
              char& slot = mark[f->pow(x, k)];
              distinct += slot == 0;
              slot = 1;
            }
            const ResidueSet r = power_residues(*f, std::gcd(k, q - 1));
            bool same = distinct == r.size();
            for (std::uint32_t y : r.members) same = same && mark[y];
            rec.expect("normalization", same, pair_name(k, p, m));
          }
        }
      },
      [&](std::size_t i, const char* what) {
        rec.fail("existence-iff-coverage",
                 "q=" + std::to_string(fields[i].q) + ": exception " + what);
      });
  rec.note(std::to_string(pairs.load()) + " pairs (k | q - 1) over " +
           std::to_string(fields.size()) + " fields");
  return rec.finish("existence", max_q, start);
}

// ---------------------------------------------------------------------------

SuiteReport verify_semiprimitive(const VerifyOptions& options) {
  const auto start = Clock::now();
  const std::uint64_t max_q = resolve_max_q("semiprimitive", options);
  Recorder rec({"value-two", "small-range", "subfield-nonexistence", "disjoint", "is-new",
                "gcd-trichotomy"});
  constexpr std::uint64_t kSmallRangeMaxQ = std::uint64_t{1} << 16;

  // gcd(b^m - 1, b^t + 1) is 1, 2 or b^gcd(m, t) + 1.
  for (std::uint64_t b = 2; b <= 10; ++b) {
    for (std::uint64_t m = 1; m <= 12; ++m) {
      for (std::uint64_t t = 1; t <= 12; ++t) {
        const BigInt d = gcd(ipow(BigInt(b), m) - 1, ipow(BigInt(b), t) + 1);
        const bool ok = d == 1 || d == 2 || d == ipow(BigInt(b), std::gcd(m, t)) + 1;
        rec.expect("gcd-trichotomy", ok,
                   "b=" + std::to_string(b) + " m=" + std::to_string(m) +
                       " t=" + std::to_string(t) + " gcd=" + to_decimal(d));
      }
    }
  }

  const std::vector<FieldOrder> fields = prime_powers_up_to(max_q);
  std::atomic<std::uint64_t> semiprimitive{0}, exceptional{0};
  parallel_for(
      fields.size(), thread_count(options),
      [&](std::size_t i) {
        const auto [p, m, q] = fields[i];
        FieldPtr f;
        for (std::uint64_t k : divisors(q - 1)) {
          if (k < 2) continue;
          const BigInt kb(k);
          const PairClassification cls = classify_pair(kb, p, m);
          const std::string id = pair_name(k, p, m);
          rec.expect("disjoint", !(is_semiprimitive(kb, p, m) && is_subfield(kb, p, m)), id);
          const bool sound_case =
              cls.kind == PairKind::kSemiprimitive || cls.kind == PairKind::kExceptional;
          const bool small_case = cls.small_range && q <= std::min(max_q, kSmallRangeMaxQ);
          if (cls.kind == PairKind::kSubfield) {
            rec.expect("subfield-nonexistence", !waring_exists(kb, p, m), id);
          }
          if (sound_case) {
            rec.expect("is-new", cls.is_new == !cls.small_range, id);
          }
          if (!sound_case && !small_case) continue;
          if (!f) f = build_field(p, m, options.budget);
          const auto value = waring_bfs(GPGraph(f, k), options.budget).value;
          if (sound_case) {
            (cls.kind == PairKind::kSemiprimitive ? semiprimitive : exceptional)++;
            rec.expect("value-two", value == std::optional<std::uint64_t>(2),
                       id + " (" + to_string(cls.kind) + ") = " + show(value));
          }
          if (small_case) {
            rec.expect("small-range", value == std::optional<std::uint64_t>(2),
                       id + " = " + show(value));
          }
        }
      },
      [&](std::size_t i, const char* what) {
        rec.fail("value-two", "q=" + std::to_string(fields[i].q) + ": exception " + what);
      });
  rec.note(std::to_string(semiprimitive.load()) + " semiprimitive and " +
           std::to_string(exceptional.load()) + " exceptional pairs checked by BFS");
  rec.note("small-range pairs checked for q <= " +
           std::to_string(std::min(max_q, kSmallRangeMaxQ)));
  return rec.finish("semiprimitive", max_q, start);
}

// ---------------------------------------------------------------------------

SuiteReport verify_kononen(const VerifyOptions& options) {
  const auto start = Clock::now();
  const std::uint64_t max_q = resolve_max_q("kononen", options);
  Recorder rec({"kononen1", "kononen2", "required-instances"});

  struct Instance {
    int form;
    std::uint64_t p, r;
    unsigned e;
    ClosedForm cf;
  };
  std::vector<Instance> instances;
  std::uint64_t skipped = 0;
  const std::vector<std::uint64_t> primes = primes_up_to(max_q);
  for (std::uint64_t r : primes) {
    if (r - 1 > 64) break;
    for (unsigned e = 1;; ++e) {
      const std::uint64_t phi = pow64(r, e - 1) * (r - 1);
      if (phi >= 64 || pow64(2, phi) > max_q) break;
      for (std::uint64_t p : primes) {
        if (p == r) continue;
        if (pow64(p, phi) > max_q) break;
        for (int form : {1, 2}) {
          try {
            ClosedForm cf = form == 1 ? kononen1(p, r, e) : kononen2(p, r, e);
            instances.push_back({form, p, r, e, std::move(cf)});
          } catch (const Error&) {
            ++skipped;
          }
        }
      }
    }
  }

  std::mutex seen_mu;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> seen;
  parallel_for(
      instances.size(), thread_count(options),
      [&](std::size_t i) {
        const Instance& in = instances[i];
        const std::uint64_t q = static_cast<std::uint64_t>(in.cf.q);
        const std::uint64_t k = static_cast<std::uint64_t>(in.cf.k);
        unsigned m = 0;
        for (std::uint64_t x = 1; x < q; x *= in.p) ++m;
        const auto value = waring_bfs(GPGraph(build_field(in.p, m, options.budget), k),
                                      options.budget)
                               .value;
        std::ostringstream id;
        id << "kononen" << in.form << "(p=" << in.p << ", r=" << in.r << ", e=" << in.e
           << "): " << pair_name(k, in.p, m) << " formula " << to_decimal(in.cf.value)
           << ", BFS " << show(value);
        const bool ok = value && BigInt(*value) == in.cf.value;
        rec.expect(in.form == 1 ? "kononen1" : "kononen2", ok, id.str());
        if (value) {
          std::lock_guard lock(seen_mu);
          seen[{k, q}] = *value;
        }
      },
      [&](std::size_t i, const char* what) {
        rec.fail(instances[i].form == 1 ? "kononen1" : "kononen2",
                 std::string("exception ") + what);
      });

  struct Required {
    std::uint64_t k, q, value;
  };
  for (const Required& r : {Required{7, 64, 3}, Required{2, 9, 2}, Required{8, 25, 4},
                            Required{4, 25, 3}, Required{8, 81, 3}}) {
    if (r.q > max_q) continue;
    const auto it = seen.find({r.k, r.q});
    rec.expect("required-instances", it != seen.end() && it->second == r.value,
               "g(" + std::to_string(r.k) + ", " + std::to_string(r.q) +
                   ") missing or not " + std::to_string(r.value));
  }
  if (81 <= max_q) {
    const auto g881 = waring_bfs(GPGraph(build_field(3, 4), 8)).value;
    std::string claimed = "?";
    for (const ListEntry& e : list_entries()) {
      if (e.k == 8 && e.p == 3 && e.m == 4) claimed = std::to_string(e.claimed);
    }
    rec.note("g(8, 81): BFS " + show(g881) + ", kononen2(3, 5, 1) " +
             to_decimal(kononen2(3, 5, 1).value) + ", listed among the g = " + claimed +
             " pairs; the listing is wrong");
  }
  rec.note(std::to_string(instances.size()) + " instances, " + std::to_string(skipped) +
           " parameter sets rejected by the preconditions");
  return rec.finish("kononen", max_q, start);
}

// ---------------------------------------------------------------------------

SuiteReport verify_catalog(const VerifyOptions& options) {
  const auto start = Clock::now();
  const std::uint64_t max_q = resolve_max_q("catalog", options);
  Recorder rec({"family-values", "list-entries", "known-value-sweep"});
  constexpr std::uint64_t kSweepMaxQ = 4096;

  struct Task {
    std::string family;
    ScanRow row;
  };
  std::vector<Task> tasks;
  std::uint64_t unverifiable = 0;
  for (const CatalogFamily& fam : catalog_families()) {
    for (ScanRow& row : family_scan(fam.id, ScanRanges{}, max_q)) {
      if (!row.bfs_verifiable || row.disputed || !row.value) {
        ++unverifiable;
        continue;
      }
      tasks.push_back({fam.id, std::move(row)});
    }
  }

  BfsOracle oracle(options.budget);
  const unsigned threads = thread_count(options);
  parallel_for(
      tasks.size(), threads,
      [&](std::size_t i) {
        const Task& t = tasks[i];
        const std::uint64_t k = static_cast<std::uint64_t>(t.row.k);
        const auto value = oracle.waring(t.row.p, t.row.m, k);
        rec.expect("family-values", value && BigInt(*value) == *t.row.value,
                   t.family + ": " + pair_name(k, t.row.p, t.row.m) + " catalog " +
                       to_decimal(*t.row.value) + ", BFS " + show(value));
      },
      [&](std::size_t i, const char* what) {
        rec.fail("family-values", tasks[i].family + ": exception " + what);
      });

  for (const ListEntry& e : list_entries()) {
    const BigInt q = ipow(BigInt(e.p), e.m);
    if (q > max_q) continue;
    const std::uint64_t qq = static_cast<std::uint64_t>(q);
    std::optional<std::uint64_t> value;
    if ((qq - 1) % e.k == 0) {
      value = waring_bfs(GPGraph(build_field(e.p, e.m), e.k), options.budget).value;
    }
    const std::string id = e.family + ": " + pair_name(e.k, e.p, e.m) + " listed " +
                           std::to_string(e.claimed) + ", BFS " + show(value);
    const bool agrees = value && *value == e.claimed;
    rec.expect("list-entries", agrees != e.disputed, id);
    if (e.disputed) rec.note("disputed " + id);
  }

  const std::vector<FieldOrder> fields = prime_powers_up_to(std::min(max_q, kSweepMaxQ));
  parallel_for(
      fields.size(), threads,
      [&](std::size_t i) {
        const auto [p, m, q] = fields[i];
        FieldPtr f;
        for (std::uint64_t k : divisors(q - 1)) {
          const auto known = known_value(BigInt(k), p, m);
          if (!known) continue;
          if (!f) f = build_field(p, m, options.budget);
          const auto value = waring_bfs(GPGraph(f, k), options.budget).value;
          rec.expect("known-value-sweep", value && BigInt(*value) == known->value,
                     known->family + ": " + pair_name(k, p, m) + " catalog " +
                         to_decimal(known->value) + ", BFS " + show(value));
        }
      },
      [&](std::size_t i, const char* what) {
        rec.fail("known-value-sweep", "q=" + std::to_string(fields[i].q) +
                                          ": exception " + what);
      });

  rec.note(std::to_string(tasks.size()) + " catalog rows checked by BFS, " +
           std::to_string(unverifiable) + " rows skipped (too large, disputed or no value)");
  return rec.finish("catalog", max_q, start);
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "reduction", "psi", "decomposition", "existence", "semiprimitive", "kononen", "catalog"};
  return names;
}

std::uint64_t default_max_q(const std::string& suite) {
  if (suite == "reduction" || suite == "kononen" || suite == "catalog") {
    return std::uint64_t{1} << 18;
  }
  if (suite == "semiprimitive") return std::uint64_t{1} << 16;
  if (suite == "existence") return 5000;
  if (suite == "decomposition") return 4096;
  return 0;
}

SuiteReport run_suite(const std::string& suite, const VerifyOptions& options) {
  if (suite == "reduction") return verify_reduction(options);
  if (suite == "psi") return verify_psi(options);
  if (suite == "decomposition") return verify_decomposition(options);
  if (suite == "existence") return verify_existence(options);
  if (suite == "semiprimitive") return verify_semiprimitive(options);
  if (suite == "kononen") return verify_kononen(options);
  if (suite == "catalog") return verify_catalog(options);
  throw Error(Errc::kInvalidArgument, "unknown suite '" + suite + "'");
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"checked", c.checked},
                      {"violations", c.violations},
                      {"failures", c.failures}});
  }
  return {{"suite", report.suite},
          {"max_q", report.max_q},
          {"passed", report.passed()},
          {"checks", std::move(checks)},
          {"notes", report.notes},
          {"elapsed_ms", report.elapsed.count()}};
}

}  // namespace gpw
