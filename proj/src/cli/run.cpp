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


#include "transduce/cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "transduce/errors.hpp"
#include "transduce/metrics.hpp"
#include "transduce/numerics.hpp"
#include "transduce/pa_array.hpp"
#include "transduce/parallel.hpp"
#include "transduce/protocol.hpp"

namespace transduce::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_spectral(const RunConfig& c) {
  return c.model == Model::beamsplitter || c.sweep.variable == "omega_mhz";
}

[[noreturn]] void bad(const std::string& key, const std::string& constraint) {
  throw ConfigError("key '" + key + "': " + constraint);
}

void require_range(const std::string& key, double v, double lo, double hi,
                   const std::string& text) {
  if (!(v >= lo && v <= hi)) bad(key, "must be " + text + ", got " + format_param(v));
}

std::string gain_label(double db) {
  return std::isinf(db) ? "Ginf" : "G" + format_param(db) + "dB";
}

// Common frequency grid for broadband integrals of an electro-optomechanical
// spectrum, in delta_omega.
std::vector<double> emo_grid(const EmoCavityParams& p) {
  const double half =
      10.0 * std::max({p.gamma_p, p.gamma_s, p.g_p, p.g_s});
  std::vector<double> grid(2001);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = -half + 2.0 * half * static_cast<double>(i) / (grid.size() - 1);
  }
  return grid;
}

struct PointEval {
  double g_prime = 1.0;
  double eta_ea = 0.0;
  double n_b = 0.0;
  double q_lb = 0.0;
};

// Per-frequency EA quantities for one squeezer gain.
class Evaluator {
 public:
  Evaluator(const RunConfig& c, double g, std::vector<PaStage> stages)
      : c_(c), g_(g), stages_(std::move(stages)) {}

  PointEval at(const CouplerPoint& pt, double omega, double kappa_a) const {
    PointEval e;
    switch (c_.antisqueezer) {
      case Antisqueezer::noiseless:
        if (std::isinf(g_)) {
          e.g_prime = kInf;
          e.eta_ea = ea_efficiency(pt, kInf);
        } else if (kappa_a == 1.0) {
          e.g_prime = optimal_antisqueeze_gain(pt.kappa, g_);
          e.eta_ea = ea_efficiency(pt, g_);
        } else {
          e.g_prime = lossy_optimal_gain(pt.kappa, g_, {kappa_a});
          e.eta_ea = pt.eta * e.g_prime;
          e.n_b = lossy_noise(pt, {g_, e.g_prime}, {kappa_a});
        }
        break;
      case Antisqueezer::constant:
        e.g_prime = gain_from_db(c_.g_prime_db);
        e.eta_ea = pt.eta * e.g_prime;
        e.n_b = lossy_noise(pt, {g_, e.g_prime}, {kappa_a});
        break;
      case Antisqueezer::pa_array: {
        const Su11Amplitude a = array_amplitude(stages_, omega);
        const double m = std::abs(a.mu);
        const double n = m * std::real(a.nu / a.mu);
        e.g_prime = m * m;
        e.eta_ea = pt.eta * e.g_prime;
        e.n_b = mismatch_noise_amplitudes(pt.kappa, g_, m, n);
        break;
      }
    }
    e.q_lb = q_lb_pointwise(e.eta_ea, e.n_b);
    return e;
  }

 private:
  const RunConfig& c_;
  double g_;
  std::vector<PaStage> stages_;
};

std::vector<PaStage> identity_array(std::size_t n, double gamma) {
  std::vector<PaStage> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({0.0, gamma, i % 2 == 0 ? PaRole::antisqueezer : PaRole::squeezer});
  }
  return out;
}

EoCavityParams eo_at(const RunConfig& c, double v) {
  EoCavityParams p = c.eo;
  const std::string& var = c.sweep.variable;
  if (var == "cooperativity") p.set_cooperativity(v);
  if (var == "g_alpha_mhz") p.g_alpha = v;
  if (var == "detuning_mhz") p.detuning_error = v;
  return p;
}

EmoCavityParams emo_at(const RunConfig& c, double v) {
  EmoCavityParams p = c.emo;
  const std::string& var = c.sweep.variable;
  if (var == "gamma_m_mhz") p.gamma_m = v;
  if (var == "g_mhz") p.g_p = p.g_s = v;
  return p;
}

void check_model(const RunConfig& c, double v) {
  try {
    if (c.model == Model::eo) eo_at(c, v).validate();
    if (c.model == Model::emo) emo_at(c, v).validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("cavity parameters: ") + e.what());
  }
}

}  // namespace

std::string describe_array(const std::vector<PaStage>& stages) {
  std::string out;
  for (const PaStage& s : stages) {
    if (!out.empty()) out += "; ";
    out += std::string(s.role == PaRole::antisqueezer ? "anti" : "sq") + " g=" +
           format_param(s.g) + " Gamma=" + format_param(s.half_linewidth) + "MHz";
  }
  return out;
}

std::vector<std::string> sweep_variables(Model model) {
  switch (model) {
    case Model::beamsplitter: return {"eta", "kappa_e", "kappa_a"};
    case Model::eo: return {"omega_mhz", "cooperativity", "g_alpha_mhz", "detuning_mhz"};
    case Model::emo: return {"omega_mhz", "gamma_m_mhz", "g_mhz"};
  }
  return {};
}

std::vector<double> Sweep::values() const {
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    out[i] = scale == Scale::linear ? from + (to - from) * t
                                    : std::exp(std::log(from) + (std::log(to) - std::log(from)) * t);
  }
  out.front() = from;
  out.back() = to;
  return out;
}

RunConfig parse_run_config(const ConfigFile& f) {
  RunConfig c;
  c.echo = f.entries();

  const std::string model = f.text("model");
  if (model == "beamsplitter") {
    c.model = Model::beamsplitter;
  } else if (model == "eo") {
    c.model = Model::eo;
  } else if (model == "emo") {
    c.model = Model::emo;
  } else {
    bad("model", "must be beamsplitter, eo or emo");
  }

  c.sweep.variable = f.text("sweep.variable");
  const std::vector<std::string> vars = sweep_variables(c.model);
  if (std::find(vars.begin(), vars.end(), c.sweep.variable) == vars.end()) {
    std::string list;
    for (const auto& v : vars) list += (list.empty() ? "" : ", ") + v;
    bad("sweep.variable", "must be one of " + list + " for model " + model);
  }
  const std::string& var = c.sweep.variable;
  c.sweep.from = f.number("sweep.from");
  c.sweep.to = f.number("sweep.to");
  if (!(c.sweep.from < c.sweep.to)) bad("sweep.to", "must exceed sweep.from");
  const std::string scale = f.text_or("sweep.scale", "linear");
  if (scale == "linear") {
    c.sweep.scale = Scale::linear;
  } else if (scale == "log") {
    c.sweep.scale = Scale::log;
    if (!(c.sweep.from > 0.0)) bad("sweep.from", "must be positive on a log scale");
  } else {
    bad("sweep.scale", "must be linear or log");
  }
  c.sweep.points = f.count("sweep.points");
  if (c.sweep.points < 2) bad("sweep.points", "must be at least 2");

  // A swept quantity must not also be fixed.
  const auto fixed = [&](const std::string& key, const std::string& swept) {
    if (var == swept && f.has(key)) bad(key, "conflicts with sweep.variable = " + swept);
    return var != swept;
  };

  c.kappa_a = 1.0;
  if (fixed("ancilla.kappa_a", "kappa_a")) {
    c.kappa_a = f.number_or("ancilla.kappa_a", 1.0);
    require_range("ancilla.kappa_a", c.kappa_a, 1e-300, 1.0, "in (0, 1]");
  } else {
    require_range("sweep.from", c.sweep.from, 1e-300, 1.0, "in (0, 1] for kappa_a");
    require_range("sweep.to", c.sweep.to, 1e-300, 1.0, "in (0, 1] for kappa_a");
    if (c.model != Model::beamsplitter) bad("sweep.variable", "kappa_a sweeps need model = beamsplitter");
  }

  if (c.model == Model::beamsplitter) {
    if (fixed("coupler.eta", "eta")) {
      c.eta = f.number("coupler.eta");
      require_range("coupler.eta", c.eta, 0.0, 1.0, "in [0, 1]");
    }
    if (fixed("coupler.kappa_e", "kappa_e")) {
      c.kappa_e = f.number("coupler.kappa_e");
      require_range("coupler.kappa_e", c.kappa_e, 0.0, 1.0, "in [0, 1]");
    }
    const double max_eta = var == "eta" ? c.sweep.to : c.eta;
    const double max_ke = var == "kappa_e" ? c.sweep.to : c.kappa_e;
    if (var == "eta" || var == "kappa_e") {
      require_range("sweep.from", c.sweep.from, 0.0, 1.0, "in [0, 1]");
    }
    if (max_eta + max_ke > 1.0 + 1e-12) {
      bad(var == "kappa_e" ? "sweep.to" : (var == "eta" ? "sweep.to" : "coupler.kappa_e"),
          "eta + kappa_e must not exceed 1");
    }
  } else if (c.model == Model::eo) {
    EoCavityParams& p = c.eo;
    p.gamma_p = f.number("cavity.gamma_p_mhz");
    p.gamma_s = f.number("cavity.gamma_s_mhz");
    p.zeta_p = f.number("cavity.zeta_p");
    p.zeta_s = f.number("cavity.zeta_s");
    require_range("cavity.gamma_p_mhz", p.gamma_p, 1e-300, 1e300, "positive");
    require_range("cavity.gamma_s_mhz", p.gamma_s, 1e-300, 1e300, "positive");
    require_range("cavity.zeta_p", p.zeta_p, 0.0, 1.0, "in [0, 1]");
    require_range("cavity.zeta_s", p.zeta_s, 0.0, 1.0, "in [0, 1]");
    p.omega_s = f.number_or("cavity.omega_s_mhz", 1000.0);
    require_range("cavity.omega_s_mhz", p.omega_s, 1e-300, 1e300, "positive");
    const bool coop_fixed = fixed("cavity.cooperativity", "cooperativity");
    const bool g_fixed = fixed("cavity.g_alpha_mhz", "g_alpha_mhz");
    if (coop_fixed && g_fixed) {
      if (f.has("cavity.cooperativity") == f.has("cavity.g_alpha_mhz")) {
        bad("cavity.cooperativity", "exactly one of cavity.cooperativity and cavity.g_alpha_mhz is required");
      }
      if (f.has("cavity.cooperativity")) {
        const double coop = f.number("cavity.cooperativity");
        require_range("cavity.cooperativity", coop, 0.0, 1e300, "non-negative");
        p.set_cooperativity(coop);
      } else {
        p.g_alpha = f.number("cavity.g_alpha_mhz");
        require_range("cavity.g_alpha_mhz", p.g_alpha, 0.0, 1e300, "non-negative");
      }
    } else {
      if (f.has("cavity.cooperativity") || f.has("cavity.g_alpha_mhz")) {
        bad(f.has("cavity.cooperativity") ? "cavity.cooperativity" : "cavity.g_alpha_mhz",
            "conflicts with sweep.variable = " + var);
      }
      require_range("sweep.from", c.sweep.from, 0.0, 1e300, "non-negative");
    }
    if (fixed("cavity.detuning_mhz", "detuning_mhz")) {
      p.detuning_error = f.number_or("cavity.detuning_mhz", 0.0);
    }
  } else {
    EmoCavityParams& p = c.emo;
    p.gamma_p = f.number("cavity.gamma_p_mhz");
    p.gamma_s = f.number("cavity.gamma_s_mhz");
    p.zeta_p = f.number("cavity.zeta_p");
    p.zeta_s = f.number("cavity.zeta_s");
    require_range("cavity.gamma_p_mhz", p.gamma_p, 1e-300, 1e300, "positive");
    require_range("cavity.gamma_s_mhz", p.gamma_s, 1e-300, 1e300, "positive");
    require_range("cavity.zeta_p", p.zeta_p, 0.0, 1.0, "in [0, 1]");
    require_range("cavity.zeta_s", p.zeta_s, 0.0, 1.0, "in [0, 1]");
    if (fixed("cavity.gamma_m_mhz", "gamma_m_mhz")) {
      p.gamma_m = f.number("cavity.gamma_m_mhz");
      require_range("cavity.gamma_m_mhz", p.gamma_m, 1e-300, 1e300, "positive");
    } else {
      require_range("sweep.from", c.sweep.from, 1e-300, 1e300, "positive for gamma_m_mhz");
    }
    if (var == "g_mhz") {
      for (const char* key : {"cavity.g_p_mhz", "cavity.g_s_mhz"}) {
        if (f.has(key)) bad(key, "conflicts with sweep.variable = g_mhz");
      }
      require_range("sweep.from", c.sweep.from, 0.0, 1e300, "non-negative for g_mhz");
    } else {
      p.g_p = f.number("cavity.g_p_mhz");
      p.g_s = f.number("cavity.g_s_mhz");
      require_range("cavity.g_p_mhz", p.g_p, 0.0, 1e300, "non-negative");
      require_range("cavity.g_s_mhz", p.g_s, 0.0, 1e300, "non-negative");
    }
    p.omega_m = f.number_or("cavity.omega_m_mhz", 1e4);
    require_range("cavity.omega_m_mhz", p.omega_m, 1e-300, 1e300, "positive");
    p.set_red_sideband();
  }

  if (f.has("squeeze.g_db")) c.g_db = f.number_list("squeeze.g_db");
  const std::string mode = f.text_or("squeeze.antisqueezer", "noiseless");
  if (mode == "noiseless") {
    c.antisqueezer = Antisqueezer::noiseless;
  } else if (mode == "constant") {
    c.antisqueezer = Antisqueezer::constant;
  } else if (mode == "pa-array") {
    c.antisqueezer = Antisqueezer::pa_array;
  } else {
    bad("squeeze.antisqueezer", "must be noiseless, constant or pa-array");
  }
  for (double db : c.g_db) {
    if (!(db >= 0.0)) bad("squeeze.g_db", "gains must be >= 0 dB");
    if (std::isinf(db) && (c.antisqueezer != Antisqueezer::noiseless || c.kappa_a != 1.0)) {
      bad("squeeze.g_db", "inf needs the noiseless antisqueezer and kappa_a = 1");
    }
  }
  const auto only_for = [&](const std::string& key, Antisqueezer m, const char* name) {
    if (f.has(key) && c.antisqueezer != m) {
      bad(key, std::string("only applies to squeeze.antisqueezer = ") + name);
    }
  };
  only_for("squeeze.g_prime_db", Antisqueezer::constant, "constant");
  only_for("squeeze.pa_stages", Antisqueezer::pa_array, "pa-array");
  only_for("squeeze.seed", Antisqueezer::pa_array, "pa-array");
  if (c.antisqueezer == Antisqueezer::constant) {
    c.g_prime_db = f.number("squeeze.g_prime_db");
    require_range("squeeze.g_prime_db", c.g_prime_db, 0.0, 1e3, "in [0, 1000] dB");
  }
  if (c.antisqueezer == Antisqueezer::pa_array) {
    if (c.model != Model::eo) bad("squeeze.antisqueezer", "pa-array needs model = eo");
    if (c.kappa_a != 1.0) bad("ancilla.kappa_a", "must be 1 with the pa-array antisqueezer");
    c.pa_stages = f.has("squeeze.pa_stages") ? f.count("squeeze.pa_stages") : 4;
    if (c.pa_stages < 1 || c.pa_stages > 8) bad("squeeze.pa_stages", "must be 1..8");
    c.seed = f.has("squeeze.seed") ? f.count("squeeze.seed") : 1;
  }

  c.output_path = f.text_or("output.path", "");
  const std::string format = f.text_or("output.format", "csv");
  if (format != "csv" && format != "json") bad("output.format", "must be csv or json");
  c.format = parse_format(format);

  f.reject_unused();
  check_model(c, c.sweep.from);
  check_model(c, c.sweep.to);
  return c;
}

Dataset run_sweep(const RunConfig& c, const std::string& name) {
  Dataset data;
  data.name = name;
  data.params = c.echo;
  data.add_param("units.rates", "bits*MHz (integral of bits/use over d omega / 2 pi, omega in MHz)");
  data.add_param("units.ebp", "MHz (integral of efficiency over d omega)");
  if (c.model == Model::eo) {
    data.add_param("derived.g_alpha_mhz", c.eo.g_alpha);
    data.add_param("derived.cooperativity", c.eo.cooperativity());
  }

  const std::vector<double> xs = c.sweep.values();
  const std::string& var = c.sweep.variable;
  const auto unit_of = [&](const std::string& v) -> std::string {
    if (v.find("_mhz") != std::string::npos) return "MHz";
    return "1";
  };
  data.columns.push_back({var, unit_of(var)});

  // Arrays are optimized once per gain for spectral sweeps.
  std::vector<std::vector<PaStage>> arrays(c.g_db.size());
  if (c.antisqueezer == Antisqueezer::pa_array && is_spectral(c)) {
    for (std::size_t k = 0; k < c.g_db.size(); ++k) {
      const double g = gain_from_db(c.g_db[k]);
      arrays[k] = g == 1.0 ? identity_array(c.pa_stages, c.eo.gamma_s)
                           : optimize_array(c.pa_stages, g, c.eo, c.seed).stages;
      data.add_param("derived.pa_array." + gain_label(c.g_db[k]), describe_array(arrays[k]));
    }
  }

  std::vector<std::vector<double>> rows(xs.size());
  if (is_spectral(c)) {
    for (const char* col : {"eta", "kappa", "kappa_e"}) data.columns.push_back({col, "1"});
    data.columns.push_back({"q1", "bits/use"});
    for (double db : c.g_db) {
      const std::string l = gain_label(db);
      data.columns.push_back({"g_prime_" + l, "1"});
      data.columns.push_back({"eta_ea_" + l, "1"});
      data.columns.push_back({"n_b_" + l, "photons"});
      data.columns.push_back({"q_lb_" + l, "bits/use"});
    }
    parallel_for(xs.size(), [&](std::size_t i) {
      const double x = xs[i];
      CouplerPoint pt;
      double kappa_a = c.kappa_a;
      if (c.model == Model::beamsplitter) {
        const double eta = var == "eta" ? x : c.eta;
        const double ke = var == "kappa_e" ? x : c.kappa_e;
        if (var == "kappa_a") kappa_a = x;
        pt = CouplerPoint::from_loss(eta, ke);
      } else if (c.model == Model::eo) {
        pt = coupler_point(x, c.eo);
      } else {
        pt = emo_coupler_point(x, c.emo);
      }
      std::vector<double>& row = rows[i];
      row = {x, pt.eta, pt.kappa, pt.kappa_e(), q1_pointwise(pt.eta)};
      for (std::size_t k = 0; k < c.g_db.size(); ++k) {
        const Evaluator ev(c, gain_from_db(c.g_db[k]), arrays[k]);
        const PointEval e = ev.at(pt, x, kappa_a);
        row.insert(row.end(), {e.g_prime, e.eta_ea, e.n_b, e.q_lb});
      }
    });
  } else {
    if (c.model == Model::eo) {
      data.columns.push_back({"cooperativity", "1"});
      data.columns.push_back({"g_alpha_mhz", "MHz"});
    } else {
      data.columns.push_back({"ebp_upper_bound_mhz", "MHz"});
    }
    data.columns.push_back({"ebp_mhz", "MHz"});
    data.columns.push_back({"q1_rate", "bits*MHz"});
    for (double db : c.g_db) {
      data.columns.push_back({"ebp_ea_" + gain_label(db), "MHz"});
      data.columns.push_back({"q_lb_rate_" + gain_label(db), "bits*MHz"});
    }
    parallel_for(xs.size(), [&](std::size_t i) {
      const double x = xs[i];
      std::vector<double>& row = rows[i];
      row.push_back(x);
      std::function<CouplerPoint(double)> coupler;
      std::vector<double> grid;
      double scale = 1.0;
      EoCavityParams eo;
      if (c.model == Model::eo) {
        eo = eo_at(c, x);
        coupler = [eo](double w) { return coupler_point(w, eo); };
        grid = default_grid(eo, 2001);
        scale = std::max(eo.gamma_p, eo.gamma_s);
        row.insert(row.end(), {eo.cooperativity(), eo.g_alpha, ebp_ea(eo, 1.0).value});
      } else {
        const EmoCavityParams em = emo_at(c, x);
        coupler = [em](double w) { return emo_coupler_point(w, em); };
        grid = emo_grid(em);
        scale = std::max(em.gamma_p, em.gamma_s);
        const bool coupled = em.g_p > 0.0 && em.g_s > 0.0;
        row.push_back(coupled ? emo_ebp_upper_bound(em.g_p, em.g_s, em.zeta_p, em.zeta_s) : 0.0);
        row.push_back(emo_ebp(em).value);
      }
      row.push_back(broadband_rate([&](double w) { return q1_pointwise(coupler(w).eta); }, grid));
      for (std::size_t k = 0; k < c.g_db.size(); ++k) {
        const double g = gain_from_db(c.g_db[k]);
        std::vector<PaStage> stages;
        double pa_rate = -1.0;
        if (c.antisqueezer == Antisqueezer::pa_array) {
          if (g == 1.0) {
            stages = identity_array(c.pa_stages, eo.gamma_s);
          } else {
            const PaArrayResult r = optimize_array(c.pa_stages, g, eo, c.seed);
            stages = r.stages;
            pa_rate = r.q_lb_rate;
          }
        }
        const Evaluator ev(c, g, stages);
        double ebp = 0.0;
        if (c.model == Model::eo && c.antisqueezer == Antisqueezer::noiseless) {
          ebp = ebp_ea(eo, g).value;
        } else {
          const double shift = c.model == Model::eo && eo.detuning_error != 0.0
                                   ? conversion_peak_frequency(eo)
                                   : 0.0;
          ebp = integrate_infinite(
                    [&](double w) { return ev.at(coupler(w + shift), w + shift, c.kappa_a).eta_ea; },
                    scale)
                    .value;
        }
        const double rate =
            pa_rate >= 0.0
                ? pa_rate
                : broadband_rate([&](double w) { return ev.at(coupler(w), w, c.kappa_a).q_lb; }, grid);
        row.insert(row.end(), {ebp, rate});
      }
    });
  }
  data.rows = std::move(rows);
  return data;
}

}  // namespace transduce::cli
