// Copyright 2026 The Transduce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "transduce/cli/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "transduce/errors.hpp"

namespace transduce::cli {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool valid_key(const std::string& key) {
  if (key.empty() || key.front() == '.' || key.back() == '.') return false;
  for (char c : key) {
    if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
          c == '_' || c == '.')) {
      return false;
    }
  }
  return true;
}

}  // namespace

double parse_number(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v == "inf" || v == "+inf") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected a number, got '" + v + "'");
  }
  if (used != v.size() || std::isnan(out) || std::isinf(out)) {
    throw ConfigError("key '" + key + "': expected a number, got '" + v + "'");
  }
  return out;
}

ConfigFile ConfigFile::parse(std::string_view text, const std::string& origin) {
  ConfigFile cfg;
  cfg.origin_ = origin;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    const std::size_t eq = body.find('=');
    const std::string where = origin + ":" + std::to_string(line);
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (!valid_key(key)) throw ConfigError(where + ": invalid key '" + key + "'");
    if (value.empty()) throw ConfigError(where + ": key '" + key + "' has no value");
    if (cfg.entries_.count(key)) throw ConfigError(where + ": duplicate key '" + key + "'");
    cfg.entries_[key] = {value, line};
    cfg.ordered_.emplace_back(key, value);
  }
  return cfg;
}

ConfigFile ConfigFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path);
}

bool ConfigFile::has(const std::string& key) const { return entries_.count(key) != 0; }

const ConfigFile::Entry& ConfigFile::require(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw ConfigError(origin_ + ": missing required key '" + key + "'");
  used_[key] = true;
  return it->second;
}

std::string ConfigFile::text(const std::string& key) const { return require(key).value; }

std::string ConfigFile::text_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? text(key) : fallback;
}

double ConfigFile::number(const std::string& key) const {
  return parse_number(key, require(key).value);
}

double ConfigFile::number_or(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

std::vector<double> ConfigFile::number_list(const std::string& key) const {
  const std::string& value = require(key).value;
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const std::size_t comma = value.find(',', start);
    const std::string item =
        value.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_number(key, item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::size_t ConfigFile::count(const std::string& key) const {
  const double v = number(key);
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e9) {
    throw ConfigError("key '" + key + "': expected a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

void ConfigFile::reject_unused() const {
  for (const auto& [key, value] : ordered_) {
    if (!used_.count(key)) {
      throw ConfigError(origin_ + ":" + std::to_string(entries_.at(key).line) + ": unknown key '" +
                        key + "'");
    }
  }
}

}  // namespace transduce::cli
