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
#include <cstdint>
#include <string>
#include <vector>

#include "transduce/cavity_emo.hpp"
#include "transduce/cavity_eo.hpp"
#include "transduce/cli/config.hpp"
#include "transduce/cli/dataset.hpp"
#include "transduce/pa_array.hpp"

namespace transduce::cli {

enum class Model { beamsplitter, eo, emo };
enum class Antisqueezer { noiseless, constant, pa_array };
enum class Scale { linear, log };

struct Sweep {
  std::string variable;
  double from = 0.0;
  double to = 1.0;
  Scale scale = Scale::linear;
  std::size_t points = 2;

  std::vector<double> values() const;
};

struct RunConfig {
  Model model = Model::beamsplitter;
  // Beamsplitter coupler.
  double eta = 0.0;
  double kappa_e = 0.0;
  EoCavityParams eo;
  EmoCavityParams emo;
  // Squeezer gains; inf is allowed with the noiseless antisqueezer.
  std::vector<double> g_db{0.0};
  Antisqueezer antisqueezer = Antisqueezer::noiseless;
  double g_prime_db = 0.0;
  std::size_t pa_stages = 4;
  std::uint64_t seed = 1;
  double kappa_a = 1.0;
  Sweep sweep;
  std::string output_path;
  OutputFormat format = OutputFormat::csv;
  // Config entries in file order, echoed into dataset headers.
  std::vector<std::pair<std::string, std::string>> echo;
};

// Validates every key; errors name the key and the violated constraint.
RunConfig parse_run_config(const ConfigFile& file);

// Evaluates the sweep. Points run concurrently; rows keep sweep order.
Dataset run_sweep(const RunConfig& config, const std::string& name = "run");

// "anti g=... Gamma=...MHz; sq ..." for dataset headers.
std::string describe_array(const std::vector<PaStage>& stages);

// Variables accepted by sweep.variable for a model.
std::vector<std::string> sweep_variables(Model model);

}  // namespace transduce::cli
