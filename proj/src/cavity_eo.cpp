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

#include "transduce/cavity_eo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "transduce/errors.hpp"
#include "transduce/simd/kernels.hpp"

namespace transduce {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_resonant(const EoCavityParams& p, const char* what) {
  p.validate();
  if (p.detuning_error != 0.0) {
    throw DomainError(std::string(what) + ": closed form requires detuning_error = 0");
  }
}

Complex resonant_denominator(double omega, const EoCavityParams& p) {
  return (1.0 - 2.0 * kI * omega / p.gamma_p) * (1.0 - 2.0 * kI * omega / p.gamma_s) +
         p.cooperativity();
}

simd::EoKernelParams kernel_params(const EoCavityParams& p) {
  return {p.gamma_p, p.gamma_s, p.zeta_p, p.zeta_s, p.cooperativity()};
}

double detuned_eta(double omega, const EoCavityParams& p) {
  return detuned_coupler_point(omega, p).eta;
}

}  // namespace

double EoCavityParams::cooperativity() const {
  return 4.0 * g_alpha * g_alpha / (gamma_s * gamma_p);
}

EoCavityParams& EoCavityParams::set_cooperativity(double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("cooperativity must be finite and >= 0");
  g_alpha = std::sqrt(c * gamma_s * gamma_p / 4.0);
  return *this;
}

void EoCavityParams::validate() const {
  if (!(gamma_p > 0.0) || !(gamma_s > 0.0) || !std::isfinite(gamma_p) || !std::isfinite(gamma_s)) {
    throw DomainError("EoCavityParams: linewidths must be positive and finite");
  }
  if (!(zeta_p >= 0.0 && zeta_p <= 1.0) || !(zeta_s >= 0.0 && zeta_s <= 1.0)) {
    throw DomainError("EoCavityParams: coupling ratios must lie in [0, 1]");
  }
  if (!(g_alpha >= 0.0) || !std::isfinite(cooperativity())) {
    throw DomainError("EoCavityParams: g_alpha must be >= 0 with finite cooperativity");
  }
  if (!std::isfinite(detuning_error)) throw DomainError("EoCavityParams: detuning_error must be finite");
  if (!(omega_s > 0.0) || !std::isfinite(omega_s)) {
    throw DomainError("EoCavityParams: omega_s must be positive");
  }
}

void Spectrum::validate() const {
  if (omegas.size() != values.size()) throw GridMismatch("Spectrum: grid and values differ in length");
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    if (!std::isfinite(values[i])) throw DomainError("Spectrum: non-finite sample");
    if (i > 0 && !(omegas[i] > omegas[i - 1])) throw DomainError("Spectrum: grid not increasing");
  }
}

Complex probe_transmissivity_amplitude(double omega, const EoCavityParams& p) {
  require_resonant(p, "probe_transmissivity_amplitude");
  return -1.0 + 2.0 * p.zeta_p * (1.0 - 2.0 * kI * omega / p.gamma_s) / resonant_denominator(omega, p);
}

Complex conversion_amplitude(double omega, const EoCavityParams& p) {
  require_resonant(p, "conversion_amplitude");
  return 2.0 * kI * std::sqrt(p.cooperativity() * p.zeta_p * p.zeta_s) /
         resonant_denominator(omega, p);
}

ComplexMatrix detuned_transfer_matrix(double omega, const EoCavityParams& p) {
  p.validate();
  const double delta_s = p.omega_s;
  const double delta_p = -p.omega_s + p.detuning_error;
  const Complex ig = kI * p.g_alpha;
  const double gsc = std::sqrt(p.zeta_s * p.gamma_s);
  const double gs0 = std::sqrt((1.0 - p.zeta_s) * p.gamma_s);
  const double gpc = std::sqrt(p.zeta_p * p.gamma_p);
  const double gp0 = std::sqrt((1.0 - p.zeta_p) * p.gamma_p);

  const ComplexMatrix a = ComplexMatrix::from_rows({
      {-p.gamma_s / 2 - kI * delta_s, ig, 0.0, 0.0},
      {ig, -p.gamma_p / 2 + kI * delta_p, 0.0, 0.0},
      {0.0, 0.0, -p.gamma_s / 2 + kI * delta_s, -ig},
      {0.0, 0.0, -ig, -p.gamma_p / 2 - kI * delta_p},
  });
  ComplexMatrix b(4, 8);
  b(0, 0) = gsc;
  b(0, 1) = gs0;
  b(1, 2) = gpc;
  b(1, 3) = gp0;
  b(2, 4) = gsc;
  b(2, 5) = gs0;
  b(3, 6) = gpc;
  b(3, 7) = gp0;
  ComplexMatrix c(4, 4);
  c(0, 0) = gsc;
  c(1, 1) = gpc;
  c(2, 2) = gsc;
  c(3, 3) = gpc;
  ComplexMatrix d(4, 8);
  d(0, 0) = -1.0;
  d(1, 2) = -1.0;
  d(2, 4) = -1.0;
  d(3, 6) = -1.0;

  const ComplexMatrix m = (-kI * omega) * ComplexMatrix::identity(4) - a;
  return c * solve_linear_complex(m, b) + d;
}

CouplerPoint detuned_coupler_point(double omega, const EoCavityParams& p) {
  const ComplexMatrix s = detuned_transfer_matrix(omega + p.omega_s, p);
  const Complex to_signal = s(1, 0);
  const Complex to_probe = s(1, 2);
  return CouplerPoint::make(std::norm(to_signal), std::norm(to_probe), std::arg(to_signal),
                            std::arg(to_probe));
}

CouplerPoint coupler_point(double omega, const EoCavityParams& p) {
  p.validate();
  if (p.detuning_error != 0.0) return detuned_coupler_point(omega, p);
  const Complex k = probe_transmissivity_amplitude(omega, p);
  const Complex e = conversion_amplitude(omega, p);
  return CouplerPoint::make(std::norm(e), std::norm(k), std::arg(e), std::arg(k));
}

double conversion_peak_frequency(const EoCavityParams& p) {
  p.validate();
  if (p.detuning_error == 0.0) {
    // |denominator|^2 as a quadratic in w^2; a positive stationary point means split peaks.
    const double pp = p.gamma_p * p.gamma_s;
    const double s = 1.0 / p.gamma_p + 1.0 / p.gamma_s;
    const double u = pp * (1.0 + p.cooperativity()) / 4.0 - pp * pp * s * s / 8.0;
    return u > 0.0 ? std::sqrt(u) : 0.0;
  }
  const double half_span = 10.0 * std::max(p.gamma_p, p.gamma_s) + std::abs(p.detuning_error);
  constexpr int kScan = 4001;
  double best_w = -half_span;
  double best = -1.0;
  const double step = 2.0 * half_span / (kScan - 1);
  for (int i = 0; i < kScan; ++i) {
    const double w = -half_span + step * i;
    const double v = detuned_eta(w, p);
    if (v > best) {
      best = v;
      best_w = w;
    }
  }
  double lo = best_w - step;
  double hi = best_w + step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = detuned_eta(x1, p);
  double f2 = detuned_eta(x2, p);
  while (hi - lo > 1e-10 * (1.0 + std::abs(best_w))) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = detuned_eta(x2, p);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = detuned_eta(x1, p);
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> default_grid(const EoCavityParams& p, std::size_t points) {
  if (points < 2) throw DomainError("default_grid: need at least two points");
  const double center = p.detuning_error == 0.0 ? 0.0 : conversion_peak_frequency(p);
  const double half_span = 10.0 * std::max(p.gamma_p, p.gamma_s);
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = center - half_span + 2.0 * half_span * static_cast<double>(i) / (points - 1);
  }
  return grid;
}

void resonant_efficiency_batch(const EoCavityParams& p, std::span<const double> grid,
                               std::span<double> eta, std::span<double> kappa) {
  require_resonant(p, "resonant_efficiency_batch");
  simd::eo_resonant(kernel_params(p), grid, eta, kappa);
}

Spectrum efficiency_spectrum(const EoCavityParams& p, std::span<const double> grid) {
  p.validate();
  Spectrum s;
  s.omegas.assign(grid.begin(), grid.end());
  s.values.resize(grid.size());
  if (p.detuning_error == 0.0) {
    std::vector<double> kappa(grid.size());
    resonant_efficiency_batch(p, grid, s.values, kappa);
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) s.values[i] = detuned_eta(grid[i], p);
  }
  s.validate();
  return s;
}

double ea_efficiency_infinite(double omega, const EoCavityParams& p) {
  require_resonant(p, "ea_efficiency_infinite");
  const double c = p.cooperativity();
  const double gs2 = p.gamma_s * p.gamma_s;
  return c * gs2 * p.zeta_s /
         (gs2 * (c + 1.0 - p.zeta_p) + 4.0 * omega * omega * (1.0 - p.zeta_p));
}

Spectrum ea_efficiency_spectrum(const EoCavityParams& p, double g_in,
                                std::span<const double> grid) {
  p.validate();
  if (!(g_in >= 1.0)) throw DomainError("ea_efficiency_spectrum: G must be >= 1");
  Spectrum s;
  s.omegas.assign(grid.begin(), grid.end());
  s.values.resize(grid.size());
  if (p.detuning_error == 0.0) {
    if (std::isinf(g_in)) {
      for (std::size_t i = 0; i < grid.size(); ++i) s.values[i] = ea_efficiency_infinite(grid[i], p);
    } else {
      std::vector<double> eta(grid.size());
      std::vector<double> kappa(grid.size());
      resonant_efficiency_batch(p, grid, eta, kappa);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        s.values[i] = ea_efficiency(CouplerPoint::make(eta[i], kappa[i]), g_in);
      }
    }
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      s.values[i] = ea_efficiency(detuned_coupler_point(grid[i], p), g_in);
    }
  }
  s.validate();
  return s;
}

double half_power_bandwidth(const Spectrum& s) {
  s.validate();
  if (s.values.size() < 3) throw NotUnimodal("half_power_bandwidth: too few samples");
  const auto peak = std::max_element(s.values.begin(), s.values.end());
  const double half = 0.5 * *peak;
  std::vector<double> crossings;
  for (std::size_t i = 0; i + 1 < s.values.size(); ++i) {
    const double a = s.values[i];
    const double b = s.values[i + 1];
    if ((a < half) != (b < half)) {
      const double t = (half - a) / (b - a);
      crossings.push_back(s.omegas[i] + t * (s.omegas[i + 1] - s.omegas[i]));
    }
  }
  if (crossings.size() != 2) {
    throw NotUnimodal("half_power_bandwidth: expected two half-maximum crossings, found " +
                      std::to_string(crossings.size()));
  }
  return crossings[1] - crossings[0];
}

}  // namespace transduce
