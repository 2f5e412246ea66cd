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

#include "shorbrach/config.hpp"

#include <cctype>
#include <charconv>
#include <fmt/core.h>
#include <fstream>
#include <sstream>

#include "shorbrach/errors.hpp"

namespace shorbrach {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

KeyValueConfig KeyValueConfig::parse(std::string_view text, std::string_view source) {
  KeyValueConfig cfg;
  cfg.source_ = std::string(source);
  int line = 0;
  while (!text.empty()) {
    ++line;
    const auto nl = text.find('\n');
    const auto raw = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (raw.empty() || raw.front() == '#') continue;
    const auto eq = raw.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(fmt::format("{}:{}: expected 'key = value'", source, line));
    const auto key = trim(raw.substr(0, eq));
    const auto value = trim(raw.substr(eq + 1));
    if (key.empty()) throw ConfigError(fmt::format("{}:{}: empty key", source, line));
    if (cfg.has(key)) throw ConfigError(fmt::format("{}:{}: duplicate key '{}'", source, line, key));
    cfg.values_.emplace(std::string(key), std::string(value));
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFileError(fmt::format("cannot open config file '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

bool KeyValueConfig::has(std::string_view key) const { return values_.find(key) != values_.end(); }

std::optional<std::string> KeyValueConfig::get(std::string_view key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> KeyValueConfig::get_double(std::string_view key) const {
  auto v = get(key);
  if (!v) return std::nullopt;
  auto d = parse_double(*v);
  if (!d) throw ConfigError(fmt::format("{}: key '{}' is not a number: '{}'", source_, key, *v));
  return d;
}

std::optional<long long> KeyValueConfig::get_int(std::string_view key) const {
  auto v = get(key);
  if (!v) return std::nullopt;
  long long out = 0;
  const auto s = trim(*v);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ConfigError(fmt::format("{}: key '{}' is not an integer: '{}'", source_, key, *v));
  return out;
}

std::vector<std::pair<std::string, std::string>> KeyValueConfig::with_prefix(std::string_view prefix) const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, v] : values_)
    if (k.size() > prefix.size() && std::string_view(k).substr(0, prefix.size()) == prefix)
      out.emplace_back(k.substr(prefix.size()), v);
  return out;
}

void KeyValueConfig::set(std::string key, std::string value) { values_[std::move(key)] = std::move(value); }

}  // namespace shorbrach
