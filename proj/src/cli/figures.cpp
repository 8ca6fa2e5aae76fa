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


#include "transduce/cli/figures.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "transduce/cavity_eo.hpp"
#include "transduce/cli/config.hpp"
#include "transduce/cli/run.hpp"
#include "transduce/errors.hpp"
#include "transduce/metrics.hpp"
#include "transduce/numerics.hpp"
#include "transduce/pa_array.hpp"
#include "transduce/parallel.hpp"
#include "transduce/protocol.hpp"

namespace transduce::cli {

namespace {

constexpr const char* kEoDevice =
    "model = eo\n"
    "cavity.gamma_p_mhz = 25.8\n"
    "cavity.gamma_s_mhz = 13.706\n"
    "cavity.zeta_p = 0.99\n"
    "cavity.zeta_s = 0.99\n";

Dataset sweep(const std::string& name, const std::string& text) {
  return run_sweep(parse_run_config(ConfigFile::parse(text, name)), name);
}

std::string number_text(double v) { return format_param(v); }

// Copies column `from_name` of `from` into `to` as `to_name`.
void take_column(Dataset& to, const Dataset& from, const std::string& from_name,
                 const std::string& to_name) {
  const std::size_t k = from.column_index(from_name);
  to.columns.push_back({to_name, from.columns[k].unit});
  for (std::size_t i = 0; i < to.rows.size(); ++i) to.rows[i].push_back(from.rows[i][k]);
}

// Keeps the listed leading columns and drops the rest.
void keep_columns(Dataset& d, const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(d.column_index(n));
  std::vector<Column> cols;
  for (std::size_t k : idx) cols.push_back(d.columns[k]);
  for (auto& row : d.rows) {
    std::vector<double> r;
    for (std::size_t k : idx) r.push_back(row[k]);
    row = std::move(r);
  }
  d.columns = std::move(cols);
}

void drop_param(Dataset& d, const std::string& key) {
  std::erase_if(d.params, [&](const auto& kv) { return kv.first == key; });
}

Dataset fig2(const std::string& id) {
  const bool a = id == "fig2a";
  Dataset d = sweep(id, std::string("model = beamsplitter\n") +
                            (a ? "coupler.kappa_e = 0.01\n"
                                 "sweep.variable = eta\n"
                                 "sweep.from = 1e-3\n"
                                 "sweep.to = 0.99\n"
                                 "sweep.scale = log\n"
                                 "sweep.points = 201\n"
                               : "coupler.eta = 0.01\n"
                                 "sweep.variable = kappa_e\n"
                                 "sweep.from = 0\n"
                                 "sweep.to = 0.99\n"
                                 "sweep.points = 199\n") +
                            "squeeze.g_db = 0, 10, 20, 30\n");
  d.add_param("caption", a ? "eta_EA versus eta, kappa_E = 0.01, G from 0dB to 30dB by step of 10dB"
                           : "eta_EA versus kappa_E, eta = 0.01, G from 0dB to 30dB by step of 10dB");
  return d;
}

Dataset fig3a() {
  Dataset d = sweep("fig3a", std::string(kEoDevice) +
                                 "cavity.cooperativity = 0.1\n"
                                 "squeeze.g_db = 0, 10, 20, 30, inf\n"
                                 "sweep.variable = omega_mhz\n"
                                 "sweep.from = -100\n"
                                 "sweep.to = 100\n"
                                 "sweep.points = 401\n");
  d.add_param("caption", "C = 0.1, zeta_P = zeta_S = 0.99, Gamma_P = 25.8MHz, Gamma_S = 13.706MHz");
  return d;
}

// Linewidths maximizing the EA EBP at |g alpha| = 1 MHz, as (Gamma_P, Gamma_S, EBP).
std::array<double, 3> optimal_linewidths(double g_in) {
  const double lo = std::log(1e-2);
  const double hi = std::log(1e2);
  const auto objective = [g_in](std::span<const double> x) {
    EoCavityParams p;
    p.gamma_p = std::exp(x[0]);
    p.gamma_s = std::exp(x[1]);
    p.zeta_p = p.zeta_s = 0.99;
    p.g_alpha = 1.0;
    return -ebp_ea(p, g_in).value;
  };
  NelderMeadOptions opt;
  opt.restarts = 8;
  opt.parallel_restarts = true;
  const std::vector<double> x0{0.0, 0.0};
  const OptimizeResult r = nelder_mead(objective, x0, {{lo, lo}, {hi, hi}}, 1, opt);
  return {std::exp(r.best_x[0]), std::exp(r.best_x[1]), -r.best_value};
}

Dataset fig3b() {
  const std::vector<double> gains{0, 10, 20, 30};
  Dataset d = sweep("fig3b", std::string(kEoDevice) +
                                 "squeeze.g_db = 0, 10, 20, 30\n"
                                 "sweep.variable = g_alpha_mhz\n"
                                 "sweep.from = 0.1\n"
                                 "sweep.to = 100\n"
                                 "sweep.scale = log\n"
                                 "sweep.points = 61\n");
  std::vector<std::string> keep{"g_alpha_mhz", "cooperativity", "ebp_mhz"};
  for (double db : gains) keep.push_back("ebp_ea_G" + number_text(db) + "dB");
  keep_columns(d, keep);
  for (double db : gains) {
    const auto best = optimal_linewidths(gain_from_db(db));
    const std::string l = "G" + number_text(db) + "dB";
    d.columns.push_back({"ebp_ea_opt_" + l, "MHz"});
    d.columns.push_back({"gamma_p_opt_" + l, "MHz"});
    d.columns.push_back({"gamma_s_opt_" + l, "MHz"});
    for (auto& row : d.rows) {
      const double ga = row[0];
      row.insert(row.end(), {best[2] * ga, best[0] * ga, best[1] * ga});
    }
  }
  d.add_param("optimized.method",
              "nelder_mead over (ln Gamma_P, ln Gamma_S), bounds [1e-2, 1e2]*|g alpha|, "
              "8 restarts, seed 1");
  d.add_param("optimized.scaling",
              "solved at |g alpha| = 1 MHz; EBP and optimal linewidths scale linearly with |g alpha|");
  d.add_param("caption", "zeta_P = zeta_S = 0.99, Gamma_P = 25.8MHz, Gamma_S = 13.706MHz except optimized columns");
  return d;
}

std::vector<Dataset> fig3c() {
  Dataset d = sweep("fig3c", std::string(kEoDevice) +
                                 "squeeze.g_db = 0, 10, 20, 30\n"
                                 "sweep.variable = cooperativity\n"
                                 "sweep.from = 1e-3\n"
                                 "sweep.to = 100\n"
                                 "sweep.scale = log\n"
                                 "sweep.points = 101\n");
  std::vector<std::string> keep{"cooperativity", "q1_rate"};
  for (double db : {0, 10, 20, 30}) keep.push_back("q_lb_rate_G" + number_text(db) + "dB");
  keep_columns(d, keep);
  d.add_param("caption", "zeta_P = zeta_S = 0.99, Gamma_P = 25.8MHz, Gamma_S = 13.706MHz");

  Dataset th;
  th.name = "fig3c_thresholds";
  th.add_param("cavity.zeta_p", "0.99");
  th.add_param("cavity.zeta_s", "0.99");
  th.columns = {{"g_db", "dB"}, {"c_threshold", "1"}};
  for (int db = 0; db <= 30; ++db) {
    th.rows.push_back({static_cast<double>(db), c_threshold_ea(0.99, 0.99, gain_from_db(db))});
  }
  return {std::move(d), std::move(th)};
}

std::vector<Dataset> figA1() {
  const std::vector<double> kappa_a{1.0, 0.99, 0.95, 0.9, 0.8};
  std::vector<Dataset> out;
  for (const auto& [id, db] : {std::pair{"figA1a", 10}, std::pair{"figA1b", 20}}) {
    Dataset d;
    for (double ka : kappa_a) {
      const Dataset s = sweep(id, "model = beamsplitter\n"
                                  "coupler.kappa_e = 0.01\n"
                                  "ancilla.kappa_a = " + number_text(ka) + "\n"
                                  "squeeze.g_db = " + number_text(db) + "\n"
                                  "sweep.variable = eta\n"
                                  "sweep.from = 1e-3\n"
                                  "sweep.to = 0.99\n"
                                  "sweep.scale = log\n"
                                  "sweep.points = 201\n");
      if (d.rows.empty()) {
        d = s;
        keep_columns(d, {"eta", "q1"});
        drop_param(d, "ancilla.kappa_a");
      }
      take_column(d, s, "q_lb_G" + number_text(db) + "dB", "q_lb_kappa_a" + number_text(ka));
    }
    d.add_param("curves.ancilla.kappa_a", "1, 0.99, 0.95, 0.9, 0.8");
    d.add_param("caption", "G = " + number_text(db) + "dB, kappa_E = 0.01, q1 is the non-EA G = 0dB curve");
    out.push_back(std::move(d));
  }
  return out;
}

const std::vector<double> kDetunings{0, 10, 20, 30, 40};

Dataset figA2(const std::string& id) {
  Dataset d;
  for (double delta : kDetunings) {
    std::string text = std::string(kEoDevice) + "cavity.detuning_mhz = " + number_text(delta) +
                       "\nsqueeze.g_db = 30\n";
    if (id == "figA2a") {
      text += "cavity.cooperativity = 0.1\nsweep.variable = omega_mhz\nsweep.from = -100\n"
              "sweep.to = 100\nsweep.points = 401\n";
    } else if (id == "figA2b") {
      text += "sweep.variable = g_alpha_mhz\nsweep.from = 0.1\nsweep.to = 100\n"
              "sweep.scale = log\nsweep.points = 41\n";
    } else {
      text += "sweep.variable = cooperativity\nsweep.from = 1e-3\nsweep.to = 100\n"
              "sweep.scale = log\nsweep.points = 61\n";
    }
    const Dataset s = sweep(id, text);
    const std::string tag = "_delta" + number_text(delta) + "mhz";
    if (d.rows.empty()) {
      d = s;
      keep_columns(d, {s.columns[0].name});
      drop_param(d, "cavity.detuning_mhz");
    }
    if (id == "figA2a") {
      take_column(d, s, "eta", "eta" + tag);
      take_column(d, s, "kappa_e", "kappa_e" + tag);
      take_column(d, s, "eta_ea_G30dB", "eta_ea" + tag);
    } else if (id == "figA2b") {
      take_column(d, s, "ebp_mhz", "ebp" + tag);
      take_column(d, s, "ebp_ea_G30dB", "ebp_ea" + tag);
    } else {
      take_column(d, s, "q1_rate", "q1_rate" + tag);
      take_column(d, s, "q_lb_rate_G30dB", "q_lb_rate" + tag);
    }
  }
  d.add_param("curves.cavity.detuning_mhz", "0, 10, 20, 30, 40");
  d.add_param("frame", "omega in the cavity-resonance frame, pump-frame omega minus omega_S");
  d.add_param("caption", std::string("delta from 0 to 40MHz, G = 30dB, ") +
                             (id == "figA2a" ? "C = 0.1, " : "") +
                             "zeta_P = zeta_S = 0.99, Gamma_P = 25.8MHz, Gamma_S = 13.706MHz");
  return d;
}

EoCavityParams pa_device() {
  EoCavityParams p;
  p.gamma_p = 25.8;
  p.gamma_s = 13.706;
  p.zeta_p = p.zeta_s = 1.0;
  p.set_cooperativity(0.49);
  return p;
}

void add_pa_params(Dataset& d) {
  d.add_param("cavity.gamma_p_mhz", "25.8");
  d.add_param("cavity.gamma_s_mhz", "13.706");
  d.add_param("cavity.zeta_p", "1");
  d.add_param("cavity.zeta_s", "1");
  d.add_param("cavity.cooperativity", "0.49");
  d.add_param("caption", "Gamma_P = 25.8MHz, Gamma_S = 13.706MHz, zeta_P = zeta_S = 1, C = 0.49");
}

Dataset figA4a() {
  const EoCavityParams p = pa_device();
  Dataset d;
  d.name = "figA4a";
  add_pa_params(d);
  d.add_param("relative_db", "10 log10(G' / G'*(omega = 0))");
  d.columns = {{"g_db", "dB"}, {"relative_db", "dB"}, {"advantage", "1"}};
  for (double db : {5.0, 10.0, 15.0, 20.0}) {
    const ConstantGainScan s = constant_gain_scan(p, gain_from_db(db), 3.0, 121);
    for (std::size_t i = 0; i < s.relative_db.size(); ++i) {
      d.rows.push_back({db, s.relative_db[i], s.advantage[i]});
    }
  }
  return d;
}

const std::vector<std::size_t> kDepths{1, 2, 4};

Dataset figA4b(std::uint64_t seed) {
  const EoCavityParams p = pa_device();
  const double base = non_ea_rate(p);
  Dataset d;
  d.name = "figA4b";
  add_pa_params(d);
  d.add_param("seed", std::to_string(seed));
  d.columns = {{"g_db", "dB"}};
  for (std::size_t n : kDepths) d.columns.push_back({"advantage_n" + std::to_string(n), "1"});
  d.columns.push_back({"advantage_noiseless", "1"});
  for (double db : {0.0, 5.0, 10.0, 15.0, 20.0}) {
    const double g = gain_from_db(db);
    std::vector<double> row{db};
    if (g == 1.0) {
      row.insert(row.end(), kDepths.size() + 1, 1.0);
    } else {
      const PaArrayResult r = optimize_array(4, g, p, seed);
      for (std::size_t n : kDepths) {
        const auto& stages = r.stages_by_depth[n - 1];
        row.push_back(array_rate(p, g, stages) / base);
        d.add_param("array.G" + number_text(db) + "dB.n" + std::to_string(n), describe_array(stages));
      }
      row.push_back(noiseless_rate(p, g) / base);
    }
    d.rows.push_back(std::move(row));
  }
  return d;
}

Dataset figA4c(std::uint64_t seed) {
  const EoCavityParams p = pa_device();
  const double g = gain_from_db(10);
  const PaArrayResult r = optimize_array(4, g, p, seed);
  Dataset d;
  d.name = "figA4c";
  add_pa_params(d);
  d.add_param("squeeze.g_db", "10");
  d.add_param("seed", std::to_string(seed));
  d.columns = {{"omega_mhz", "MHz"}};
  for (std::size_t n : kDepths) {
    d.columns.push_back({"g_prime_n" + std::to_string(n), "1"});
    d.add_param("array.n" + std::to_string(n), describe_array(r.stages_by_depth[n - 1]));
  }
  d.columns.push_back({"g_prime_target", "1"});
  const std::size_t points = 401;
  d.rows.resize(points);
  parallel_for(points, [&](std::size_t i) {
    const double w = -100.0 + 200.0 * static_cast<double>(i) / (points - 1);
    std::vector<double> row{w};
    for (std::size_t n : kDepths) {
      row.push_back(array_amplitude(r.stages_by_depth[n - 1], w).gain());
    }
    row.push_back(noiseless_gain_target(w, coupler_point(w, p), g));
    d.rows[i] = std::move(row);
  });
  return d;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig2a",  "fig2b",  "fig3a",  "fig3b",
                                            "fig3c",  "figA1",  "figA2a", "figA2b",
                                            "figA2c", "figA4a", "figA4b", "figA4c"};
  return ids;
}

std::vector<Dataset> make_figure(const std::string& id, std::uint64_t seed) {
  if (id == "fig2a" || id == "fig2b") return {fig2(id)};
  if (id == "fig3a") return {fig3a()};
  if (id == "fig3b") return {fig3b()};
  if (id == "fig3c") return fig3c();
  if (id == "figA1") return figA1();
  if (id == "figA2a" || id == "figA2b" || id == "figA2c") return {figA2(id)};
  if (id == "figA4a") return {figA4a()};
  if (id == "figA4b") return {figA4b(seed)};
  if (id == "figA4c") return {figA4c(seed)};
  std::string known;
  for (const auto& k : figure_ids()) known += (known.empty() ? "" : ", ") + k;
  throw UnknownFigure("unknown figure '" + id + "'; known ids: " + known);
}

}  // namespace transduce::cli
