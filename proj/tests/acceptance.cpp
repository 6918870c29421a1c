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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gpw/arith.hpp"
#include "gpw/certificate_json.hpp"
#include "gpw/classify.hpp"
#include "gpw/ff.hpp"
#include "gpw/gpgraph.hpp"
#include "gpw/reduction.hpp"
#include "gpw/verify.hpp"

namespace {

using gpw::BigInt;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

long peak_rss_mb() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss / 1024;
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
  if (!ok) ++failures;
}

// Runs body, turning exceptions into a failed criterion.
void criterion(int id, const std::function<void(std::ostringstream&, bool&)>& body) {
  std::ostringstream detail;
  bool ok = true;
  try {
    body(detail, ok);
  } catch (const std::exception& e) {
    ok = false;
    detail << " exception: " << e.what();
  }
  report(id, ok, detail.str());
}

bool check_passed(const gpw::SuiteReport& r, const std::string& name, std::ostream& os) {
  const gpw::CheckResult* c = r.find(name);
  if (!c) {
    os << " [" << name << ": missing]";
    return false;
  }
  os << " [" << name << ": " << c->checked << " checked, " << c->violations << " violations";
  if (!c->failures.empty()) os << ", first: " << c->failures.front();
  os << "]";
  return c->checked > 0 && c->passed();
}

bool suite_passed(const gpw::SuiteReport& r, std::ostream& os) {
  bool ok = true;
  for (const gpw::CheckResult& c : r.checks) ok = check_passed(r, c.name, os) && ok;
  os << " in " << r.elapsed.count() / 1000.0 << " s";
  return ok;
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(2);

  criterion(1, [](std::ostringstream& os, bool& ok) {
    struct Golden {
      std::uint64_t k, p;
      unsigned m;
      std::uint64_t value;
    };
    const std::vector<Golden> golden = {
        {19, 7, 3, 3},     {38, 7, 3, 6},     {39, 5, 4, 4},      {12, 7, 2, 6},
        {30, 11, 2, 10},   {90, 19, 2, 18},   {132, 23, 2, 22},   {240, 31, 2, 30},
        {462, 43, 2, 42},  {11, 3, 5, 2},     {817, 7, 6, 3},     {1634, 7, 6, 6}};
    double worst = 0;
    os.precision(3);
    os << std::fixed << "golden BFS values";
    for (const Golden& g : golden) {
      const auto start = Clock::now();
      const auto value = gpw::waring_bfs(gpw::GPGraph(gpw::build_field(g.p, g.m), g.k)).value;
      const double t = seconds_since(start);
      worst = std::max(worst, t);
      if (!value || *value != g.value || t >= 5.0) {
        ok = false;
        os << " [g(" << g.k << ", " << g.p << "^" << g.m << ") = "
           << (value ? std::to_string(*value) : "none") << " in " << t << " s, expected "
           << g.value << "]";
      }
    }
    os << ", " << golden.size() << " instances, slowest " << worst << " s";
  });

  criterion(2, [](std::ostringstream& os, bool& ok) {
    const auto start = Clock::now();
    const auto value =
        gpw::waring_bfs(gpw::GPGraph(gpw::build_field(2, 20), 41943), std::uint64_t{1} << 20)
            .value;
    const double t = seconds_since(start);
    const long rss = peak_rss_mb();
    os.precision(2);
    os << std::fixed << "BFS g(41943, 2^20) = " << (value ? std::to_string(*value) : "none")
       << " in " << t << " s, peak RSS " << rss << " MB";
    ok = value && *value == 10 && t <= 120.0 && rss <= 512;

    const gpw::Certificate cert = gpw::reduce(BigInt(41943), 2, 20);
    const gpw::ReplayResult rr = gpw::replay(cert);
    os << "; certificate value " << (cert.value ? gpw::to_decimal(*cert.value) : "none")
       << " from base g(" << gpw::to_decimal(cert.base_k) << ", 2^" << cert.base_a << ") = "
       << (cert.base_value ? gpw::to_decimal(*cert.base_value) : "none") << ", replay "
       << (rr.ok ? "ok" : rr.message);
    ok = ok && cert.value && *cert.value == 10 && cert.base_k == 3 && cert.base_a == 4 &&
         cert.base_value && *cert.base_value == 2 && rr.ok;
  });

  std::optional<gpw::SuiteReport> reduction;
  criterion(3, [&](std::ostringstream& os, bool& ok) {
    reduction = gpw::verify_reduction({});
    os << "reduction oracle equivalence, q <= " << reduction->max_q;
    ok = check_passed(*reduction, "oracle", os);
    ok = check_passed(*reduction, "k-identity", os) && ok;
    ok = check_passed(*reduction, "certificate", os) && ok;
    os << " in " << reduction->elapsed.count() / 1000.0 << " s";
    ok = ok && reduction->elapsed.count() <= 600000;
  });

  criterion(4, [](std::ostringstream& os, bool& ok) {
    os << "psi arithmetic";
    ok = suite_passed(gpw::verify_psi({}), os);
  });

  criterion(5, [&](std::ostringstream& os, bool& ok) {
    os << "b-prime checker equivalence";
    ok = reduction && check_passed(*reduction, "b-prime-iff", os);
    ok = reduction && check_passed(*reduction, "specialized-implies-main", os) && ok;
  });

  criterion(6, [&](std::ostringstream& os, bool& ok) {
    const gpw::SuiteReport d = gpw::verify_decomposition({});
    os << "decomposition witnesses";
    ok = check_passed(d, "named-witness", os);
    ok = check_passed(d, "agreement", os) && ok;
    ok = reduction && check_passed(*reduction, "witness", os) && ok;
    if (reduction) {
      for (const std::string& n : reduction->notes) {
        if (n.find("arc checks") != std::string::npos) os << " (" << n << ")";
      }
    }
  });

  criterion(7, [](std::ostringstream& os, bool& ok) {
    os << "existence iff coverage";
    ok = suite_passed(gpw::verify_existence({}), os);
  });

  criterion(8, [](std::ostringstream& os, bool& ok) {
    const gpw::SuiteReport r = gpw::verify_semiprimitive({});
    os << "semiprimitive and exceptional pairs have value 2, q <= " << r.max_q;
    const gpw::CheckResult* two = r.find("value-two");
    ok = two && two->checked > 0;
    ok = suite_passed(r, os) && ok;
  });

  criterion(9, [](std::ostringstream& os, bool& ok) {
    const gpw::SuiteReport r = gpw::verify_kononen({});
    os << "Kononen closed forms vs BFS";
    ok = suite_passed(r, os);
    for (const std::string& n : r.notes) os << "; " << n;
  });

  criterion(10, [](std::ostringstream& os, bool& ok) {
    const BigInt q47 = gpw::ipow(BigInt(47), 23);
    const gpw::Certificate a = gpw::reduce((q47 - 1) / 529, 47, 23);
    const gpw::Certificate b = gpw::reduce(BigInt(163), 41, 81);
    const gpw::ReplayResult ra = gpw::replay(a);
    const gpw::ReplayResult rb = gpw::replay(b);
    // The JSON form must replay too.
    const gpw::ReplayResult ja = gpw::replay(gpw::certificate_from_json(gpw::to_json(a)));
    const gpw::ReplayResult jb = gpw::replay(gpw::certificate_from_json(gpw::to_json(b)));
    os << "g((47^23-1)/529, 47^23) = " << (a.value ? gpw::to_decimal(*a.value) : "none")
       << " via " << a.steps.size() << " step(s) and base " << gpw::source_name(a)
       << ", replay " << (ra.ok && ja.ok ? "ok" : ra.message + ja.message)
       << "; g(163, 41^81) = " << (b.value ? gpw::to_decimal(*b.value) : "none") << " via "
       << gpw::source_name(b) << ", replay " << (rb.ok && jb.ok ? "ok" : rb.message + jb.message)
       << ", classified "
       << gpw::to_string(gpw::classify_pair(BigInt(163), 41, 81).kind);
    ok = a.value && *a.value == 46 && b.value && *b.value == 2 && ra.ok && rb.ok && ja.ok &&
         jb.ok;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) +
                                                            " criteria failed")
            << std::endl;
  return failures;
}
