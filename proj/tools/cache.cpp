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

#include "cache.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "gpw/error.hpp"

namespace gpw::cli {

using nlohmann::json;

std::string CacheRecord::key() const {
  return "(" + std::to_string(p) + "," + std::to_string(m) + "," + to_decimal(k) + ")";
}

json to_json(const CacheRecord& r) {
  json j;
  j["key"] = r.key();
  j["p"] = r.p;
  j["m"] = r.m;
  j["k"] = to_decimal(r.k);
  j["value"] = r.value ? json(to_decimal(*r.value)) : json(nullptr);
  j["method"] = r.method;
  j["certificate"] = r.certificate ? *r.certificate : json(nullptr);
  j["tool_version"] = r.tool_version;
  j["timestamp"] = r.timestamp;
  return j;
}

CacheRecord record_from_json(const json& j) {
  try {
    CacheRecord r;
    r.p = j.at("p").get<std::uint64_t>();
    r.m = j.at("m").get<unsigned>();
    r.k = parse_decimal(j.at("k").get<std::string>());
    if (!j.at("value").is_null()) r.value = parse_decimal(j.at("value").get<std::string>());
    r.method = j.at("method").get<std::string>();
    if (!j.at("certificate").is_null()) r.certificate = j.at("certificate");
    r.tool_version = j.at("tool_version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    if (j.at("key").get<std::string>() != r.key()) {
      throw Error(Errc::kInvalidArgument, "key does not match (p, m, k)");
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::kInvalidArgument, std::string("malformed cache record: ") + e.what());
  }
}

std::string to_line(const CacheRecord& record) { return to_json(record).dump(); }

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {}

std::size_t ResultCache::load(std::ostream& warnings) {
  std::ifstream in(path_);
  if (!in) return 0;
  std::lock_guard lock(mu_);
  std::size_t loaded = 0, line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      CacheRecord r = record_from_json(json::parse(line));
      records_[r.key()] = std::move(r);
      ++loaded;
    } catch (const std::exception& e) {
      warnings << "warning: " << path_ << ":" << line_no << ": skipping corrupt record ("
               << e.what() << ")\n";
    }
  }
  return loaded;
}

std::optional<CacheRecord> ResultCache::find(std::uint64_t p, unsigned m,
                                             const BigInt& k) const {
  CacheRecord probe;
  probe.p = p;
  probe.m = m;
  probe.k = k;
  std::lock_guard lock(mu_);
  const auto it = records_.find(probe.key());
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::append(const CacheRecord& record) {
  std::lock_guard lock(mu_);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write cache file " + path_);
  out << to_line(record) << '\n';
  records_[record.key()] = record;
}

std::size_t ResultCache::size() const {
  std::lock_guard lock(mu_);
  return records_.size();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace gpw::cli
