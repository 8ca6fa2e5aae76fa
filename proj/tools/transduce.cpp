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


#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "transduce/acceptance.hpp"
#include "transduce/cli/config.hpp"
#include "transduce/cli/dataset.hpp"
#include "transduce/cli/figures.hpp"
#include "transduce/cli/run.hpp"
#include "transduce/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

namespace cli = transduce::cli;

int do_run(const std::string& config_path, const std::string& out, const std::string& format) {
  const cli::ConfigFile file = cli::ConfigFile::load(config_path);
  cli::RunConfig config = cli::parse_run_config(file);
  if (!out.empty()) config.output_path = out;
  if (!format.empty()) config.format = cli::parse_format(format);
  const std::string name = std::filesystem::path(config_path).stem().string();
  const cli::Dataset data = cli::run_sweep(config, name);
  if (config.output_path.empty()) {
    cli::write_dataset(std::cout, data, config.format);
  } else {
    cli::write_dataset_file(config.output_path, data, config.format);
  }
  return kExitOk;
}

int do_figure(const std::string& id, std::uint64_t seed, const std::string& out_dir,
              const std::string& format) {
  const cli::OutputFormat fmt = cli::parse_format(format);
  const auto datasets = cli::make_figure(id, seed);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw transduce::IoError("cannot create directory '" + out_dir + "': " + ec.message());
  for (const cli::Dataset& d : datasets) {
    const std::filesystem::path path =
        std::filesystem::path(out_dir) / (d.name + cli::format_extension(fmt));
    cli::write_dataset_file(path.string(), d, fmt);
    std::cout << path.string() << '\n';
  }
  return kExitOk;
}

int do_selfcheck() {
  bool ok = true;
  for (const transduce::CriterionReport& r : transduce::run_acceptance()) {
    std::cout << transduce::format_report_line(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement-assisted transduction sweeps and figure datasets"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out;
  std::string run_format;
  CLI::App* run = app.add_subcommand("run", "Evaluate the sweep described by a config file");
  run->add_option("--config", config_path, "Config file")->required();
  run->add_option("--out", out, "Output file (default: output.path, else stdout)");
  run->add_option("--format", run_format, "csv or json (default: output.format)");

  std::string figure_id;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  std::string figure_format = "csv";
  CLI::App* figure = app.add_subcommand("figure", "Write the datasets of one figure");
  figure->add_option("id", figure_id, "Figure id")->required();
  figure->add_option("--seed", seed, "Optimizer seed");
  figure->add_option("--out-dir", out_dir, "Output directory");
  figure->add_option("--format", figure_format, "csv or json");

  CLI::App* selfcheck = app.add_subcommand("selfcheck", "Run the acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (run->parsed()) return do_run(config_path, out, run_format);
    if (figure->parsed()) return do_figure(figure_id, seed, out_dir, figure_format);
    if (selfcheck->parsed()) return do_selfcheck();
  } catch (const transduce::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const transduce::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const transduce::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const transduce::DomainError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}
