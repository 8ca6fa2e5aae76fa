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


#include "transduce/cli/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "transduce/errors.hpp"

namespace transduce::cli {

void Dataset::add_param(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
}

void Dataset::add_param(const std::string& key, double value) {
  params.emplace_back(key, format_param(value));
}

std::size_t Dataset::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].name == name) return i;
  }
  throw Error("dataset '" + this->name + "' has no column '" + name + "'");
}

std::vector<double> Dataset::column(const std::string& name) const {
  const std::size_t i = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[i]);
  return out;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw ConfigError("output format must be csv or json, got '" + text + "'");
}

const char* format_extension(OutputFormat format) {
  return format == OutputFormat::csv ? ".csv" : ".json";
}

std::string format_value(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.11e", value == 0.0 ? 0.0 : value);
  return buffer;
}

std::string format_param(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

void write_csv(std::ostream& out, const Dataset& data) {
  out << "# dataset: " << data.name << '\n';
  for (const auto& [key, value] : data.params) out << "# " << key << " = " << value << '\n';
  out << "# units:";
  for (std::size_t i = 0; i < data.columns.size(); ++i) {
    out << (i ? ", " : " ") << data.columns[i].name << " [" << data.columns[i].unit << ']';
  }
  out << '\n';
  for (std::size_t i = 0; i < data.columns.size(); ++i) out << (i ? "," : "") << data.columns[i].name;
  out << '\n';
  for (const auto& row : data.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_value(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Dataset& data) {
  nlohmann::ordered_json doc;
  doc["dataset"] = data.name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : data.params) params[key] = value;
  doc["params"] = params;
  nlohmann::ordered_json columns = nlohmann::ordered_json::array();
  for (const Column& c : data.columns) columns.push_back({{"name", c.name}, {"unit", c.unit}});
  doc["columns"] = columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : data.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (double v : row) r.push_back(format_value(v));
    rows.push_back(r);
  }
  doc["rows"] = rows;
  out << doc.dump(1) << '\n';
}

void write_dataset(std::ostream& out, const Dataset& data, OutputFormat format) {
  if (format == OutputFormat::csv) {
    write_csv(out, data);
  } else {
    write_json(out, data);
  }
}

void write_dataset_file(const std::string& path, const Dataset& data, OutputFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  write_dataset(out, data, format);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

Dataset read_csv(std::istream& in) {
  Dataset data;
  std::string line;
  bool header_seen = false;
  std::vector<std::string> units;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# dataset: ", 0) == 0) {
      data.name = line.substr(11);
    } else if (line.rfind("# units: ", 0) == 0) {
      std::stringstream ss(line.substr(9));
      std::string item;
      while (std::getline(ss, item, ',')) {
        const std::size_t open = item.rfind('[');
        const std::size_t close = item.rfind(']');
        units.push_back(open != std::string::npos && close > open
                            ? item.substr(open + 1, close - open - 1)
                            : "");
      }
    } else if (line.rfind("# ", 0) == 0) {
      const std::size_t eq = line.find(" = ");
      if (eq != std::string::npos) data.add_param(line.substr(2, eq - 2), line.substr(eq + 3));
    } else {
      std::vector<std::string> cells;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) cells.push_back(cell);
      if (!header_seen) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
          data.columns.push_back({cells[k], k < units.size() ? units[k] : ""});
        }
        header_seen = true;
      } else {
        std::vector<double> row;
        for (const std::string& c : cells) row.push_back(std::stod(c));
        data.rows.push_back(std::move(row));
      }
    }
  }
  return data;
}

}  // namespace transduce::cli
