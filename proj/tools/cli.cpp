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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "cache.hpp"
#include "gpw/arith.hpp"
#include "gpw/certificate_json.hpp"
#include "gpw/classify.hpp"
#include "gpw/error.hpp"
#include "gpw/ff.hpp"
#include "gpw/gpgraph.hpp"
#include "gpw/reduction.hpp"
#include "gpw/verify.hpp"

#ifndef GPW_VERSION
#define GPW_VERSION "0.0.0"
#endif

namespace gpw::cli {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

const char* tool_version() { return GPW_VERSION; }

namespace {

struct Globals {
  bool json = false;
  std::uint64_t budget = kDefaultBfsBudget;
  std::string cache_path;
  unsigned threads = 0;
};

struct PairArgs {
  std::uint64_t p = 0;
  unsigned m = 0;
  std::string k;
};

// Validated (p, m, k) with k reduced to gcd(k, p^m - 1).
struct Pair {
  std::uint64_t p;
  unsigned m;
  BigInt k_given;
  BigInt k;
  BigInt q;
};

Pair validate(const PairArgs& a) {
  if (!is_prime(a.p)) {
    throw Error(Errc::kInvalidPrime, std::to_string(a.p) + " is not prime");
  }
  if (a.m < 1) throw Error(Errc::kInvalidArgument, "m must be at least 1");
  const BigInt k = parse_decimal(a.k);
  if (k < 1) throw Error(Errc::kInvalidArgument, "k must be at least 1");
  const BigInt q = ipow(BigInt(a.p), a.m);
  return {a.p, a.m, k, normalize_k(k, q), q};
}

std::string pair_text(const BigInt& k, std::uint64_t p, unsigned m) {
  return "g(" + to_decimal(k) + ", " + std::to_string(p) + "^" + std::to_string(m) + ")";
}

std::string graph_text(const BigInt& k, std::uint64_t p, std::uint64_t m) {
  return "Gamma(" + to_decimal(k) + ", " + std::to_string(p) + "^" + std::to_string(m) + ")";
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json header(const std::string& schema, double elapsed_ms) {
  return {{"schema", "gpwaring." + schema + "/" + kSchemaVersion},
          {"tool_version", tool_version()},
          {"elapsed_ms", elapsed_ms}};
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string method_of(const Certificate& cert) {
  if (!cert.steps.empty()) return to_string(Method::kReduction);
  if (cert.source == BaseSource::kBFS) return to_string(Method::kBFS);
  return to_string(Method::kCatalog);
}

void print_certificate(std::ostream& out, const Certificate& cert) {
  out << "certificate:\n";
  std::size_t i = 0;
  for (const ReductionStep& s : cert.steps) {
    out << "  step " << ++i << ": " << to_string(s.rule) << " a=" << s.a << " b=" << s.b
        << " c=" << to_decimal(s.c) << " u=" << to_decimal(s.u) << "\n"
        << "          " << s.citation << "\n";
  }
  out << "  base: " << pair_text(cert.base_k, cert.p, cert.base_a) << " = "
      << (cert.base_value ? to_decimal(*cert.base_value) : std::string("?")) << " ["
      << source_name(cert) << "]\n";
}

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(threads, n); ++t) pool.emplace_back(worker);
  worker();
}

std::unique_ptr<ResultCache> open_cache(const Globals& g, std::ostream& err) {
  if (g.cache_path.empty()) return nullptr;
  auto cache = std::make_unique<ResultCache>(g.cache_path);
  cache->load(err);
  return cache;
}

// ---------------------------------------------------------------------------

int cmd_compute(const Globals& g, const PairArgs& args, const std::string& method,
                std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const Pair pair = validate(args);
  auto cache = open_cache(g, err);

  CacheRecord rec;
  rec.p = pair.p;
  rec.m = pair.m;
  rec.k = pair.k;
  bool resolved = false, cached = false;
  std::optional<Certificate> cert;
  std::string unresolved_reason;

  if (auto hit = cache ? cache->find(pair.p, pair.m, pair.k) : std::nullopt) {
    rec = *hit;
    cached = true;
    resolved = true;
    if (rec.certificate) cert = certificate_from_json(*rec.certificate);
  } else if (!waring_exists(pair.k, pair.p, pair.m)) {
    rec.method = "existence";
    resolved = true;
  } else if (method == "bfs") {
    if (pair.q > g.budget) {
      unresolved_reason = "q exceeds the BFS budget " + std::to_string(g.budget);
    } else {
      const auto f = build_field(pair.p, pair.m, g.budget);
      const WaringResult r =
          waring_bfs(GPGraph(f, static_cast<std::uint64_t>(pair.k)), g.budget);
      rec.value = BigInt(*r.value);
      rec.method = to_string(Method::kBFS);
      resolved = true;
    }
  } else {
    cert = reduce(pair.k, pair.p, pair.m, g.budget);
    if (cert->value) {
      rec.value = cert->value;
      rec.method = method_of(*cert);
      rec.certificate = to_json(*cert);
      resolved = true;
    } else if (method == "auto" && pair.q <= g.budget) {
      const auto f = build_field(pair.p, pair.m, g.budget);
      const WaringResult r =
          waring_bfs(GPGraph(f, static_cast<std::uint64_t>(pair.k)), g.budget);
      rec.value = BigInt(*r.value);
      rec.method = to_string(Method::kBFS);
      resolved = true;
    } else {
      unresolved_reason = "no reduction, catalog entry or BFS within budget resolves the base " +
                          pair_text(cert->base_k, cert->p, cert->base_a);
    }
  }
  if (resolved && cache && !cached) {
    rec.tool_version = tool_version();
    rec.timestamp = utc_timestamp();
    cache->append(rec);
  }

  const std::string status = !resolved ? "unresolved" : rec.value ? "resolved" : "nonexistent";
  const int code = status == "resolved"     ? kExitOk
                   : status == "unresolved" ? kExitUnresolved
                                            : kExitNonExistent;
  if (g.json) {
    json h = header("compute", ms_since(start));
    h["cached"] = cached;
    json result = {{"p", pair.p},
                   {"m", pair.m},
                   {"k", to_decimal(pair.k_given)},
                   {"k_normalized", to_decimal(pair.k)},
                   {"q", to_decimal(pair.q)},
                   {"status", status},
                   {"value", rec.value ? json(to_decimal(*rec.value)) : json(nullptr)},
                   {"method", resolved ? json(rec.method) : json(nullptr)},
                   {"certificate", cert ? to_json(*cert) : json(nullptr)}};
    if (!unresolved_reason.empty()) result["reason"] = unresolved_reason;
    print_json(out, {{"header", h}, {"result", result}});
    return code;
  }
  if (pair.k != pair.k_given) {
    out << "note: k reduced to gcd(k, q - 1) = " << to_decimal(pair.k) << "\n";
  }
  const std::string name = pair_text(pair.k, pair.p, pair.m);
  if (status == "nonexistent") {
    out << name << " does not exist (Gamma is disconnected)\n";
  } else if (status == "unresolved") {
    out << name << " is unresolved: " << unresolved_reason << "\n";
  } else {
    out << name << " = " << to_decimal(*rec.value) << "\n";
    out << "method: " << rec.method << (cached ? " (cached)" : "") << "\n";
  }
  if (cert && resolved) print_certificate(out, *cert);
  out << "elapsed_ms: " << std::fixed << std::setprecision(3) << ms_since(start) << "\n";
  return code;
}

// ---------------------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& suite, std::uint64_t max_q,
               std::ostream& out) {
  const auto start = Clock::now();
  VerifyOptions o;
  o.max_q = max_q;
  o.threads = g.threads;
  o.budget = g.budget;
  const SuiteReport report = run_suite(suite, o);
  const int code = report.passed() ? kExitOk : kExitViolations;
  if (g.json) {
    json result = to_json(report);
    result.erase("elapsed_ms");
    print_json(out, {{"header", header("verify", ms_since(start))}, {"result", result}});
    return code;
  }
  out << "suite " << report.suite;
  if (report.max_q) out << " (max_q " << report.max_q << ")";
  out << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
  for (const CheckResult& c : report.checks) {
    out << "  " << c.name << ": " << c.checked << " checked, " << c.violations
        << " violations\n";
    for (const std::string& f : c.failures) out << "    " << f << "\n";
  }
  for (const std::string& n : report.notes) out << "  note: " << n << "\n";
  out << "elapsed_ms: " << report.elapsed.count() << "\n";
  return code;
}

// ---------------------------------------------------------------------------

std::string product_text(const DecompositionWitness& w, std::uint64_t p) {
  const std::string op = std::string(w.directed ? "directed " : "") + "box^" +
                         std::to_string(w.b);
  if (w.u == 1) return op + " K_" + std::to_string(w.base_field->q());
  return op + " " + graph_text(BigInt(w.u), p, w.a);
}

int cmd_decompose(const Globals& g, const PairArgs& args, std::ostream& out) {
  const auto start = Clock::now();
  const Pair pair = validate(args);
  const std::string name = graph_text(pair.k, pair.p, pair.m);
  if (!waring_exists(pair.k, pair.p, pair.m)) {
    if (g.json) {
      print_json(out, {{"header", header("decompose", ms_since(start))},
                       {"result", {{"status", "nonexistent"}}}});
    } else {
      out << name << " is disconnected; g does not exist\n";
    }
    return kExitNonExistent;
  }
  if (pair.q > g.budget) {
    throw Error(Errc::kBudgetExceeded,
                "q = " + to_decimal(pair.q) + " exceeds the budget " + std::to_string(g.budget));
  }
  const GPGraph graph(build_field(pair.p, pair.m, g.budget),
                      static_cast<std::uint64_t>(pair.k));
  const auto w = cartesian_decomposition(graph);
  std::optional<std::uint64_t> whole, factor;
  if (w) {
    whole = waring_bfs(graph, g.budget).value;
    factor = waring_bfs(GPGraph(w->base_field, w->u), g.budget).value;
  }
  if (g.json) {
    json result = {{"p", pair.p}, {"m", pair.m}, {"k", to_decimal(pair.k)}};
    if (w) {
      result["status"] = "decomposable";
      result["witness"] = {{"a", w->a},          {"b", w->b},
                           {"c", w->c},          {"u", w->u},
                           {"directed", w->directed}, {"span_dims", w->span_dims},
                           {"total_rank", w->total_rank}, {"arcs_checked", w->arcs_checked}};
      result["product"] = product_text(*w, pair.p);
      result["diameter"] = {{"graph", *whole}, {"factor", *factor}, {"identity_holds",
                                                                     *whole == w->b * *factor}};
    } else {
      result["status"] = "not_decomposable";
    }
    print_json(out, {{"header", header("decompose", ms_since(start))}, {"result", result}});
    return kExitOk;
  }
  if (!w) {
    out << name << " is not Cartesian decomposable\n";
    return kExitOk;
  }
  out << name << " = " << product_text(*w, pair.p) << "\n";
  out << "witness: a=" << w->a << " b=" << w->b << " c=" << w->c << " u=" << w->u
      << (w->directed ? " (directed)" : " (undirected)") << "\n";
  out << "base: " << graph_text(BigInt(w->u), pair.p, w->a) << "\n";
  out << "arcs checked: " << w->arcs_checked << "\n";
  out << "diameter: " << *whole << " = " << w->b << " * " << *factor
      << (*whole == w->b * *factor ? "" : "  MISMATCH") << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_classify(const Globals& g, const PairArgs& args, std::ostream& out) {
  const auto start = Clock::now();
  const Pair pair = validate(args);
  const bool exists = waring_exists(pair.k, pair.p, pair.m);
  std::optional<PairClassification> cls;
  if (pair.k >= 2) cls = classify_pair(pair.k, pair.p, pair.m);
  const auto known = known_value(pair.k, pair.p, pair.m);
  std::vector<Decomposition> decs;
  if (exists) decs = enumerate_decompositions(pair.k, pair.p, pair.m);

  if (g.json) {
    json result = {{"p", pair.p},
                   {"m", pair.m},
                   {"k", to_decimal(pair.k)},
                   {"exists", exists}};
    if (cls) {
      result["kind"] = to_string(cls->kind);
      result["is_new"] = cls->is_new;
      result["small_range"] = cls->small_range;
      result["subfield_degree"] =
          cls->subfield_degree ? json(*cls->subfield_degree) : json(nullptr);
      result["ell"] = cls->ell ? json(*cls->ell) : json(nullptr);
    } else {
      result["kind"] = "Trivial";
    }
    result["known_value"] =
        known ? json{{"value", to_decimal(known->value)},
                     {"family", known->family},
                     {"citation", known->citation}}
              : json(nullptr);
    json dj = json::array();
    for (const Decomposition& d : decs) {
      dj.push_back({{"a", d.a},
                    {"b", d.b},
                    {"c", to_decimal(d.c)},
                    {"u", to_decimal(d.u)},
                    {"rule", to_string(classify_rule(pair.p, d.a, d.b, d.c))}});
    }
    result["decompositions"] = dj;
    print_json(out, {{"header", header("classify", ms_since(start))}, {"result", result}});
    return kExitOk;
  }
  out << "pair: k=" << to_decimal(pair.k) << " q=" << pair.p << "^" << pair.m << "\n";
  out << "exists: " << (exists ? "yes" : "no") << "\n";
  if (cls) {
    out << "kind: " << to_string(cls->kind);
    if (cls->subfield_degree) out << " (a=" << *cls->subfield_degree << ")";
    if (cls->ell) out << " (l=" << *cls->ell << ")";
    out << "\nsmall range: " << (cls->small_range ? "yes" : "no")
        << "\nnew: " << (cls->is_new ? "yes" : "no") << "\n";
  } else {
    out << "kind: Trivial\n";
  }
  if (known) {
    out << "known value: " << to_decimal(known->value) << " [" << known->family << "] "
        << known->citation << "\n";
  }
  for (const Decomposition& d : decs) {
    out << "decomposition: a=" << d.a << " b=" << d.b << " c=" << to_decimal(d.c)
        << " u=" << to_decimal(d.u) << " rule "
        << to_string(classify_rule(pair.p, d.a, d.b, d.c)) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

int cmd_scan(const Globals& g, const std::string& family, const ScanRanges& ranges,
             const std::string& out_path, bool check, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const std::vector<ScanRow> rows = family_scan(family, ranges, g.budget);
  auto cache = check ? open_cache(g, err) : nullptr;

  struct Checked {
    bool done = false;
    std::optional<std::uint64_t> value;
    double elapsed_ms = 0;
  };
  std::vector<Checked> checked(rows.size());
  if (check) {
    parallel_for(rows.size(), g.threads, [&](std::size_t i) {
      const ScanRow& row = rows[i];
      if (!row.bfs_verifiable) return;
      const auto t0 = Clock::now();
      const auto k = static_cast<std::uint64_t>(row.k);
      checked[i].value = waring_bfs(GPGraph(build_field(row.p, row.m, g.budget), k), g.budget)
                             .value;
      checked[i].elapsed_ms = ms_since(t0);
      checked[i].done = true;
      if (cache) {
        CacheRecord rec;
        rec.p = row.p;
        rec.m = row.m;
        rec.k = row.k;
        if (checked[i].value) rec.value = BigInt(*checked[i].value);
        rec.method = to_string(Method::kBFS);
        rec.tool_version = tool_version();
        rec.timestamp = utc_timestamp();
        cache->append(rec);
      }
    });
  }

  std::size_t mismatches = 0;
  json jrows = json::array();
  std::ostringstream csv;
  csv << "p,m,k,value,method,citation,bfs_checked,elapsed_ms\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ScanRow& row = rows[i];
    const Checked& c = checked[i];
    const bool agrees =
        !c.done || (row.value && c.value && BigInt(*c.value) == *row.value);
    if (!agrees && !row.disputed) ++mismatches;
    const std::string value = row.value ? to_decimal(*row.value) : "";
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << c.elapsed_ms;
    csv << row.p << ',' << row.m << ',' << to_decimal(row.k) << ',' << value << ",catalog,"
        << csv_field(row.citation) << ',' << (c.done ? "true" : "false") << ',' << ms.str()
        << '\n';
    json jr = {{"p", row.p},
               {"m", row.m},
               {"k", to_decimal(row.k)},
               {"value", row.value ? json(value) : json(nullptr)},
               {"method", "catalog"},
               {"citation", row.citation},
               {"bfs_verifiable", row.bfs_verifiable},
               {"bfs_checked", c.done},
               {"disputed", row.disputed}};
    if (c.done) {
      jr["bfs_value"] = c.value ? json(std::to_string(*c.value)) : json(nullptr);
      jr["elapsed_ms"] = c.elapsed_ms;
    }
    jrows.push_back(std::move(jr));
  }

  std::string text;
  if (g.json) {
    text = json{{"header", header("scan", ms_since(start))},
                {"result", {{"family", family}, {"rows", jrows}}}}
               .dump(2) +
           "\n";
  } else {
    text = csv.str();
  }
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path);
    if (!file || !(file << text)) {
      throw Error(Errc::kInvalidArgument, "cannot write " + out_path);
    }
    err << rows.size() << " rows written to " << out_path << "\n";
  }
  if (mismatches > 0) {
    err << mismatches << " rows disagree with BFS\n";
    return kExitViolations;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_families(const Globals& g, std::ostream& out) {
  if (g.json) {
    json fams = json::array();
    for (const CatalogFamily& f : catalog_families()) {
      fams.push_back({{"id", f.id},
                      {"predicate", f.predicate},
                      {"value", f.value},
                      {"citation", f.citation}});
    }
    print_json(out, {{"header", header("families", 0.0)}, {"result", fams}});
    return kExitOk;
  }
  for (const CatalogFamily& f : catalog_families()) {
    out << f.id << "\n  when:  " << f.predicate << "\n  value: " << f.value
        << "\n  from:  " << f.citation << "\n";
  }
  return kExitOk;
}

void add_pair_options(CLI::App* cmd, PairArgs& a) {
  cmd->add_option("--p", a.p, "characteristic (prime)")->required();
  cmd->add_option("--m", a.m, "extension degree")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--k", a.k, "exponent k (decimal)")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Waring numbers g(k, q) over finite fields", "gpwaring"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--budget", g.budget, "largest q handled by BFS (default 2^20)")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache", g.cache_path, "JSON Lines result cache");
  app.add_option("--threads", g.threads, "worker threads (0: all cores)");

  PairArgs pair;
  std::string method = "auto";
  CLI::App* compute = app.add_subcommand("compute", "compute g(k, p^m)");
  add_pair_options(compute, pair);
  compute->add_option("--method", method, "auto, bfs or reduce")
      ->check(CLI::IsMember({"auto", "bfs", "reduce"}));

  std::string suite;
  std::uint64_t max_q = 0;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-q", max_q, "largest field size (default per suite)");

  CLI::App* decompose = app.add_subcommand("decompose", "Cartesian decomposition witness");
  add_pair_options(decompose, pair);

  CLI::App* classify = app.add_subcommand("classify", "classify a pair (k, p^m)");
  add_pair_options(classify, pair);

  std::string family, out_path;
  ScanRanges ranges;
  bool check = false;
  CLI::App* scan = app.add_subcommand("scan", "enumerate a catalog family");
  scan->add_option("family", family, "family id (see `families`)")->required();
  scan->add_option("--p-min", ranges.p_min, "smallest p");
  scan->add_option("--p-max", ranges.p_max, "largest p");
  scan->add_option("--a-max", ranges.a_max, "largest base degree");
  scan->add_option("--t-max", ranges.t_max, "largest t in 2^t-type families");
  scan->add_option("--b-max", ranges.b_max, "largest b");
  scan->add_option("--out", out_path, "output file (default stdout)");
  scan->add_flag("--check", check, "recompute verifiable rows by BFS");

  CLI::App* families = app.add_subcommand("families", "list catalog families");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << tool_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(g, pair, method, out, err);
    if (*verify) return cmd_verify(g, suite, max_q, out);
    if (*decompose) return cmd_decompose(g, pair, out);
    if (*classify) return cmd_classify(g, pair, out);
    if (*scan) return cmd_scan(g, family, ranges, out_path, check, out, err);
    if (*families) return cmd_families(g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gpw::cli
