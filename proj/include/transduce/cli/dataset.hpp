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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace transduce::cli {

struct Column {
  std::string name;
  std::string unit;
};

struct Dataset {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;

  void add_param(const std::string& key, const std::string& value);
  void add_param(const std::string& key, double value);
  std::size_t column_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;
};

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& text);
const char* format_extension(OutputFormat format);

// 12 significant digits in scientific notation.
std::string format_value(double value);
// Up to 12 significant digits without trailing zeros, for parameter echoes.
std::string format_param(double value);

void write_csv(std::ostream& out, const Dataset& data);
void write_json(std::ostream& out, const Dataset& data);
void write_dataset(std::ostream& out, const Dataset& data, OutputFormat format);
void write_dataset_file(const std::string& path, const Dataset& data, OutputFormat format);

// Reads back a CSV written by write_csv.
Dataset read_csv(std::istream& in);

}  // namespace transduce::cli
