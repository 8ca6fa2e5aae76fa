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


#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace transduce::cli {

// Flat `section.key = value` text. `#` starts a comment. Every accessor marks
// the key as used so leftovers can be reported.
class ConfigFile {
 public:
  static ConfigFile parse(std::string_view text, const std::string& origin = "<config>");
  static ConfigFile load(const std::string& path);

  bool has(const std::string& key) const;
  std::string text(const std::string& key) const;
  std::string text_or(const std::string& key, const std::string& fallback) const;
  double number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  std::vector<double> number_list(const std::string& key) const;
  std::size_t count(const std::string& key) const;

  // Throws ConfigError naming the first key no accessor asked for.
  void reject_unused() const;

  // Entries in file order.
  const std::vector<std::pair<std::string, std::string>>& entries() const { return ordered_; }

 private:
  struct Entry {
    std::string value;
    int line = 0;
  };
  const Entry& require(const std::string& key) const;

  std::string origin_;
  std::map<std::string, Entry> entries_;
  std::vector<std::pair<std::string, std::string>> ordered_;
  mutable std::map<std::string, bool> used_;
};

// Parses a real number. Accepts inf; rejects trailing garbage.
double parse_number(const std::string& key, const std::string& value);

}  // namespace transduce::cli
