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


#include "transduce/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "transduce/cavity_emo.hpp"
#include "transduce/cavity_eo.hpp"
#include "transduce/errors.hpp"
#include "transduce/metrics.hpp"
#include "transduce/numerics.hpp"
#include "transduce/pa_array.hpp"
#include "transduce/protocol.hpp"

namespace transduce {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string printf_string(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof buffer, format, args);
  va_end(args);
  return buffer;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

class Checks {
 public:
  void add(const std::string& name, bool ok, const std::string& measured) {
    passed_ = passed_ && ok;
    if (!detail_.empty()) detail_ += "; ";
    detail_ += name + (ok ? " ok" : " FAIL") + " (" + measured + ")";
  }
  bool passed() const { return passed_; }
  const std::string& detail() const { return detail_; }

 private:
  bool passed_ = true;
  std::string detail_;
};

double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

EoCavityParams eo_cavity(double gp, double gs, double zeta, double g_alpha) {
  EoCavityParams p;
  p.gamma_p = gp;
  p.gamma_s = gs;
  p.zeta_p = zeta;
  p.zeta_s = zeta;
  p.g_alpha = g_alpha;
  return p;
}

// High-cooperativity electro-optic device linewidths used by the figures.
EoCavityParams device(double c, double zeta) {
  EoCavityParams p = eo_cavity(25.8, 13.706, zeta, 0.0);
  p.set_cooperativity(c);
  return p;
}

CouplerPoint random_point(Rng& rng) {
  const double eta = rng.uniform(0.0, 1.0);
  const double kappa = rng.uniform(0.0, 1.0 - eta);
  return CouplerPoint::make(eta, kappa, rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi));
}

EoCavityParams random_eo(Rng& rng, bool detuned) {
  EoCavityParams p;
  p.gamma_p = std::exp(rng.uniform(-1, 4));
  p.gamma_s = std::exp(rng.uniform(-1, 4));
  p.zeta_p = rng.uniform(0, 1);
  p.zeta_s = rng.uniform(0, 1);
  p.set_cooperativity(std::exp(rng.uniform(-7, 4)));
  if (detuned) p.detuning_error = rng.uniform(-50, 50);
  return p;
}

EmoCavityParams random_emo(Rng& rng) {
  EmoCavityParams p;
  p.gamma_p = std::exp(rng.uniform(-2, 3));
  p.gamma_s = std::exp(rng.uniform(-2, 3));
  p.gamma_m = std::exp(rng.uniform(-6, 1));
  p.zeta_p = rng.uniform(0.1, 1);
  p.zeta_s = rng.uniform(0.1, 1);
  p.g_p = std::exp(rng.uniform(-3, 2));
  p.g_s = std::exp(rng.uniform(-3, 2));
  p.omega_m = 1e4;
  p.set_red_sideband();
  return p;
}

void criterion_1(Checks& checks, std::uint64_t) {
  const double half = ea_efficiency(CouplerPoint::from_loss(0.01, 0.01), kInf);
  checks.add("eta_EA(0.01, kE=0.01, G=inf) = 1/2", std::abs(half - 0.5) <= 1e-12,
             printf_string("%.15g", half));
  double worst = 0.0;
  for (double eta : {1e-4, 0.01, 0.3, 0.99}) {
    worst = std::max(worst, std::abs(ea_efficiency(CouplerPoint::from_loss(eta, 0.0), kInf) - 1.0));
  }
  checks.add("eta_EA(kE=0, G=inf) = 1", worst <= 1e-12, printf_string("max dev %.2e", worst));
}

void criterion_2(Checks& checks, std::uint64_t seed) {
  Rng rng(seed);
  double worst_eta = 0.0;
  double worst_nb = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const CouplerPoint q = random_point(rng);
    const double g = gain_from_db(rng.uniform(0, 20));
    const double gp = gain_from_db(rng.uniform(0, 20));
    const AncillaLoss loss{rng.uniform(0.5, 1.0)};
    const EaPointResult any = covariance_oracle(q, {g, gp}, loss);
    worst_eta = std::max(worst_eta, std::abs(any.eta_ea - q.eta * gp));
    worst_nb = std::max(worst_nb, std::abs(any.n_b - lossy_noise(q, {g, gp}, loss)));

    const EaPointResult star = covariance_oracle(q, {g, optimal_antisqueeze_gain(q.kappa, g)}, {});
    worst_eta = std::max(worst_eta, std::abs(star.eta_ea - ea_efficiency(q, g)));
    worst_nb = std::max(worst_nb, std::abs(star.n_b));

    const double lossy_gp = lossy_optimal_gain(q.kappa, g, loss);
    const EaPointResult lossy = covariance_oracle(q, {g, lossy_gp}, loss);
    worst_nb = std::max(worst_nb, std::abs(lossy.n_b - lossy_noise(q, {g, lossy_gp}, loss)));
  }
  checks.add("eta_EA", worst_eta <= 1e-10, printf_string("max dev %.2e", worst_eta));
  checks.add("N_B", worst_nb <= 1e-10, printf_string("max dev %.2e", worst_nb));
}

void criterion_3(Checks& checks, std::uint64_t seed) {
  Rng rng(seed);
  double worst_out = 0.0;
  double worst_null = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const CouplerPoint q = random_point(rng);
    const double g = std::exp(rng.uniform(0, 7));
    const double gp = std::exp(rng.uniform(0, 7));
    const BogoliubovCoefficients c = output_coefficients(q, {g, gp});
    const double scale = std::norm(c.c_signal) + std::norm(c.c_probe_vac) + std::norm(c.c_env) +
                         std::norm(c.c_ancilla_conj);
    worst_out = std::max(worst_out, std::abs(c.commutator() - 1.0) / scale);
    const BogoliubovCoefficients star =
        output_coefficients(q, {g, optimal_antisqueeze_gain(q.kappa, g)});
    worst_null = std::max(worst_null, std::abs(star.c_ancilla_conj) / std::sqrt(g));
    worst_null = std::max(worst_null, std::abs(std::norm(star.c_signal) - ea_efficiency(q, g)));
  }
  checks.add("output commutator", worst_out <= 1e-10, printf_string("max rel dev %.2e", worst_out));
  checks.add("vacuum nulling", worst_null <= 1e-10, printf_string("max dev %.2e", worst_null));

  double worst_su = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0.0, 7.999));
    std::vector<PaStage> stages;
    for (std::size_t i = 0; i < n; ++i) {
      stages.push_back({rng.uniform(0.0, 0.97), std::exp(rng.uniform(-2.0, 4.0)),
                        i % 2 == 0 ? PaRole::antisqueezer : PaRole::squeezer});
    }
    const Su11Amplitude a = array_amplitude(stages, rng.uniform(-40.0, 40.0));
    worst_su = std::max(worst_su, std::abs(a.commutator() - 1.0) / a.gain());
  }
  checks.add("SU(1,1) arrays", worst_su <= 1e-10, printf_string("max rel dev %.2e", worst_su));
}

void criterion_4(Checks& checks, std::uint64_t seed) {
  const double quad = ebp_quadrature(eo_cavity(2, 2, 1, 1), 1.0).value;
  checks.add("EBP = pi g", relative(quad, kPi) <= 1e-6,
             printf_string("%.10g, rel %.1e", quad, relative(quad, kPi)));
  const Box box{{std::log(0.1), std::log(0.1)}, {std::log(10.0), std::log(10.0)}};
  const std::vector<double> x0{0.0, std::log(5.0)};
  NelderMeadOptions opts;
  opts.restarts = 4;
  const OptimizeResult r = nelder_mead(
      [](std::span<const double> x) {
        return -ebp_quadrature(eo_cavity(std::exp(x[0]), std::exp(x[1]), 1, 1), 1.0).value;
      },
      x0, box, seed, opts);
  const double gp = std::exp(r.best_x[0]);
  const double gs = std::exp(r.best_x[1]);
  const double dev = std::max(relative(gp, 2.0), relative(gs, 2.0));
  checks.add("maximizer 2g", dev <= 1e-3, printf_string("Gamma_P %.6f Gamma_S %.6f", gp, gs));
}

void criterion_5(Checks& checks, std::uint64_t) {
  double worst = 0.0;
  for (double g : {1.0, 10.0, 100.0, 1000.0}) {
    const EoCavityParams p = eo_cavity(2, 2, 1, 1);
    const double expect = std::pow(g, 0.25) * kPi;
    worst = std::max({worst, relative(ebp_quadrature(p, g).value, expect),
                      relative(ebp_ea(p, g).value, expect)});
  }
  checks.add("G^(1/4) pi g", worst <= 1e-6, printf_string("max rel dev %.1e", worst));

  std::string ratios;
  bool ok = true;
  for (double g : {1000.0, 1e4}) {
    const double w = 2.0 * std::sqrt(g);
    const double ratio = ebp_quadrature(eo_cavity(w, w, 1, 1), g).value / (kPi * std::sqrt(g));
    ok = ok && std::abs(ratio - 0.703) <= 0.001;
    ratios += printf_string("%sG=%g: %.5f", ratios.empty() ? "" : ", ", g, ratio);
  }
  checks.add("0.703 at Gamma = 2 sqrt(G) g", ok, ratios);

  double worst_ratio = 0.0;
  for (double g : {1.0, 2.0, 3.0}) {
    const EoCavityParams p = device(1e-3, 1.0);
    worst_ratio = std::max(worst_ratio, relative(ebp_ea(p, g).value / ebp_eo_closed(p), g));
  }
  checks.add("ratio G at C=1e-3", worst_ratio <= 0.01, printf_string("max rel dev %.2e", worst_ratio));
}

void criterion_6(Checks& checks, std::uint64_t seed) {
  const double c = c_threshold(1, 1);
  checks.add("C_th(1,1)", std::abs(c - (3 - 2 * std::sqrt(2.0))) <= 1e-12, printf_string("%.15g", c));
  double worst = 0.0;
  for (double g : {1.0, 2.0, 10.0, 100.0, 1e4, 1e6}) {
    const double expect = 1.0 / std::pow(std::sqrt(g) + std::sqrt(1 + g), 2);
    worst = std::max(worst, std::abs(c_threshold_ea(1, 1, g) - expect));
  }
  checks.add("C_th,EA(1,1,G)", worst <= 1e-12, printf_string("max dev %.1e", worst));

  Rng rng(seed);
  double worst_half = 0.0;
  int checked = 0;
  while (checked < 100) {
    const double zp = rng.uniform(0.5, 1);
    const double zs = rng.uniform(0.5, 1);
    const double g = std::exp(rng.uniform(0, 7));
    double cth = 0.0;
    try {
      cth = c_threshold_ea(zp, zs, g);
    } catch (const NoThreshold&) {
      continue;
    }
    EoCavityParams p = eo_cavity(20, 10, 1, 0);
    p.zeta_p = zp;
    p.zeta_s = zs;
    p.set_cooperativity(cth);
    worst_half = std::max(worst_half, std::abs(ea_efficiency(coupler_point(0.0, p), g) - 0.5));
    ++checked;
  }
  checks.add("eta_EA(0) = 1/2 at threshold", worst_half <= 1e-8,
             printf_string("max dev %.1e", worst_half));
}

void criterion_7(Checks& checks, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const EmoCavityParams p = random_emo(rng);
    worst = std::max(worst, relative(emo_ebp(p).value, emo_ebp_quadrature(p)));
  }
  checks.add("residue vs quadrature", worst <= 1e-6, printf_string("max rel dev %.1e", worst));

  const Box box{{std::log(1e-2), std::log(1e-2)}, {std::log(1e2), std::log(1e2)}};
  const std::vector<double> x0{0.0, 0.0};
  const OptimizeResult r = nelder_mead(
      [](std::span<const double> x) {
        EmoCavityParams p;
        p.gamma_s = std::exp(x[0]);
        p.gamma_p = std::exp(x[1]);
        p.gamma_m = 1e-6;
        p.g_p = p.g_s = 1.0;
        return -emo_ebp(p).value;
      },
      x0, box, seed);
  const double best = -r.best_value;
  const double target = emo_symmetric_max(1.0, 1.0, 1.0);
  checks.add("symmetric maximum 1.749 G", relative(best, target) <= 0.005,
             printf_string("found %.6f at Gamma_S %.4f Gamma_P %.4f, expected %.6f", best,
                           std::exp(r.best_x[0]), std::exp(r.best_x[1]), target));

  int violations = 0;
  for (int k = 0; k < 10000; ++k) {
    const EmoCavityParams p = random_emo(rng);
    if (emo_ebp(p).value > emo_ebp_upper_bound(p.g_p, p.g_s, p.zeta_p, p.zeta_s)) ++violations;
  }
  checks.add("upper bound", violations == 0, printf_string("%d violations in 10000", violations));
}

void criterion_8(Checks& checks, std::uint64_t) {
  EoCavityParams p = device(0.1, 0.99);
  const double g = gain_from_db(30);
  double prev_loss = kInf;
  bool monotone = true;
  std::string losses;
  double peak0 = 0.0;
  double peak40 = 0.0;
  for (double delta : {0.0, 10.0, 20.0, 30.0, 40.0}) {
    p.detuning_error = delta;
    const double w = conversion_peak_frequency(p);
    const double loss = coupler_point(w, p).kappa_e();
    monotone = monotone && loss < prev_loss;
    prev_loss = loss;
    losses += printf_string("%s%.4g", losses.empty() ? "" : " ", loss);
    const Spectrum s = ea_efficiency_spectrum(p, g, default_grid(p, 4001));
    const double peak = *std::max_element(s.values.begin(), s.values.end());
    if (delta == 0.0) peak0 = peak;
    if (delta == 40.0) peak40 = peak;
  }
  checks.add("kappa_E at peak decreasing", monotone, losses);
  checks.add("peak eta_EA retained", peak40 >= 0.5 * peak0,
             printf_string("%.4f at 40 MHz vs %.4f at 0", peak40, peak0));
}

void criterion_9(Checks& checks, std::uint64_t seed) {
  const EoCavityParams p = device(0.49, 1.0);
  const PaArrayResult r = optimize_array(4, gain_from_db(20), p, seed);
  checks.add("N=4 array at 20 dB", r.advantage >= 6.0,
             printf_string("advantage %.3f (not bit-reproducible across optimizers)", r.advantage));
  const ConstantGainScan control = constant_gain_scan(p, gain_from_db(15));
  checks.add("constant G' at 15 dB below 1x", control.best_advantage < 1.0,
             printf_string("best %.4f at %+.3f dB from G'*(0)", control.best_advantage,
                           control.best_relative_db));
}

void criterion_10(Checks& checks, std::uint64_t) {
  const double g = gain_from_db(10);
  const AncillaLoss loss{0.9};
  double lo = kInf;
  double hi = 0.0;
  for (int k = 0; k <= 300; ++k) {
    const double eta = std::pow(10.0, -3.0 + 0.01 * k);
    if (eta > 0.99) break;
    const CouplerPoint point = CouplerPoint::from_loss(eta, 0.01);
    const double gp = lossy_optimal_gain(point.kappa, g, loss);
    const double rate = q_lb_pointwise(eta * gp, lossy_noise(point, {g, gp}, loss));
    if (rate > q1_pointwise(eta)) {
      lo = std::min(lo, eta);
      hi = std::max(hi, eta);
    }
  }
  checks.add("EA beats non-EA", hi > 0.0,
             hi > 0.0 ? printf_string("eta in [%.4f, %.4f]", lo, hi) : std::string("empty"));
}

void criterion_11(Checks& checks, std::uint64_t seed) {
  Rng rng(seed);
  double worst_eo = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const EoCavityParams p = random_eo(rng, k % 2 == 1);
    const double w = rng.uniform(-10, 10) * std::max(p.gamma_p, p.gamma_s);
    const CouplerPoint c = coupler_point(w, p);
    const double ke = 1.0 - c.eta - c.kappa;
    worst_eo = std::max({worst_eo, -c.eta, -c.kappa, -ke, c.eta + c.kappa - 1.0});
  }
  checks.add("EO passivity", worst_eo <= 1e-10, printf_string("worst violation %.1e", worst_eo));

  double worst_emo = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const EmoCavityParams p = random_emo(rng);
    const double dw = rng.uniform(-10, 10) * std::max(p.gamma_p, p.gamma_s);
    const CouplerPoint c = emo_coupler_point(dw, p);
    const double ke = 1.0 - c.eta - c.kappa;
    worst_emo = std::max({worst_emo, -c.eta, -c.kappa, -ke, c.eta + c.kappa - 1.0});
  }
  checks.add("EMO passivity", worst_emo <= 1e-10, printf_string("worst violation %.1e", worst_emo));

  int drops = 0;
  for (int k = 0; k < 1000; ++k) {
    const CouplerPoint q = random_point(rng);
    double prev = ea_efficiency(q, 1.0);
    for (double g = 1.5; g < 1e6; g *= 1.7) {
      const double v = ea_efficiency(q, g);
      if (v < prev - 1e-15) ++drops;
      prev = v;
    }
    if (ea_efficiency(q, kInf) < prev - 1e-15) ++drops;
  }
  checks.add("eta_EA monotone in G", drops == 0, printf_string("%d decreases", drops));

  double worst_det = 0.0;
  for (int k = 0; k < 500; ++k) {
    const EoCavityParams p = random_eo(rng, false);
    const double w = rng.uniform(-5, 5) * p.gamma_s;
    const CouplerPoint closed = coupler_point(w, p);
    const CouplerPoint full = detuned_coupler_point(w, p);
    worst_det = std::max({worst_det, std::abs(closed.eta - full.eta),
                          std::abs(closed.kappa - full.kappa)});
  }
  checks.add("detuned = resonant at delta=0", worst_det <= 1e-10,
             printf_string("max dev %.1e", worst_det));
}

struct Criterion {
  int id;
  const char* title;
  void (*run)(Checks&, std::uint64_t);
};

constexpr Criterion kCriteria[] = {
    {1, "EA efficiency closed forms", criterion_1},
    {2, "Covariance oracle equivalence", criterion_2},
    {3, "Bogoliubov identities", criterion_3},
    {4, "Non-EA EBP maximum", criterion_4},
    {5, "EA EBP scaling", criterion_5},
    {6, "Cooperativity thresholds", criterion_6},
    {7, "Electro-optomechanical EBP", criterion_7},
    {8, "Detuning robustness", criterion_8},
    {9, "PA-array antisqueezer", criterion_9},
    {10, "Lossy ancilla advantage", criterion_10},
    {11, "Property suite", criterion_11},
};

}  // namespace

std::vector<CriterionReport> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionReport> out;
  for (const Criterion& c : kCriteria) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), c.id) == options.only.end()) {
      continue;
    }
    CriterionReport report;
    report.id = c.id;
    report.title = c.title;
    const auto start = std::chrono::steady_clock::now();
    Checks checks;
    try {
      c.run(checks, options.seed + static_cast<std::uint64_t>(c.id));
      report.passed = checks.passed();
      report.detail = checks.detail();
    } catch (const std::exception& e) {
      report.passed = false;
      report.detail = checks.detail() + (checks.detail().empty() ? "" : "; ") +
                      "exception: " + e.what();
    }
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(report));
  }
  return out;
}

std::string format_report_line(const CriterionReport& report) {
  return printf_string("%s %2d  %-30s [%6.1f s]  ", report.passed ? "PASS" : "FAIL", report.id,
                       report.title.c_str(), report.seconds) +
         report.detail;
}

}  // namespace transduce
