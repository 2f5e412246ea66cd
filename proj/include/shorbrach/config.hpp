// Copyright 2026 The shorbrach Authors
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

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shorbrach {

/// `key = value` settings. Blank lines and lines starting with `#` are ignored;
/// a repeated key is an error.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::string_view text, std::string_view source = "<config>");
  static KeyValueConfig load(const std::filesystem::path& path);

  bool has(std::string_view key) const;
  std::optional<std::string> get(std::string_view key) const;
  /// Locale-independent number parse; throws ConfigError naming the key.
  std::optional<double> get_double(std::string_view key) const;
  std::optional<long long> get_int(std::string_view key) const;

  /// (suffix, value) for every key that starts with `prefix`.
  std::vector<std::pair<std::string, std::string>> with_prefix(std::string_view prefix) const;

  void set(std::string key, std::string value);
  const std::string& source() const noexcept { return source_; }

 private:
  std::string source_;
  std::map<std::string, std::string, std::less<>> values_;
};

/// Strict full-string number parse with std::from_chars.
std::optional<double> parse_double(std::string_view s);

}  // namespace shorbrach
