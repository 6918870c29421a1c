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

#ifndef GPW_TOOLS_CACHE_HPP_
#define GPW_TOOLS_CACHE_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include <nlohmann/json.hpp>

#include "gpw/arith.hpp"

namespace gpw::cli {

/// One computed pair. k is normalized (k | p^m - 1).
struct CacheRecord {
  std::uint64_t p = 0;
  unsigned m = 0;
  BigInt k;
  /// Absent for a non-existent Waring number.
  std::optional<BigInt> value;
  std::string method;
  std::optional<nlohmann::json> certificate;
  std::string tool_version;
  std::string timestamp;

  std::string key() const;
  friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

nlohmann::json to_json(const CacheRecord& record);
/// Throws kInvalidArgument on malformed input.
CacheRecord record_from_json(const nlohmann::json& j);

/// Serialized form: one line, no trailing newline.
std::string to_line(const CacheRecord& record);

/// Append-only JSON Lines store. Later lines override earlier ones with the
/// same key; corrupt lines are skipped with a warning.
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  /// Reads the file if it exists. Returns the number of records loaded.
  std::size_t load(std::ostream& warnings);

  std::optional<CacheRecord> find(std::uint64_t p, unsigned m, const BigInt& k) const;

  /// Appends one line and updates the in-memory index. Thread-safe.
  void append(const CacheRecord& record);

  std::size_t size() const;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  mutable std::mutex mu_;
  std::map<std::string, CacheRecord> records_;
};

std::string utc_timestamp();

}  // namespace gpw::cli

#endif  // GPW_TOOLS_CACHE_HPP_
