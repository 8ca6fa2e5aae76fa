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
#include <span>
#include <vector>

#include "transduce/numerics.hpp"
#include "transduce/protocol.hpp"

namespace transduce {

// Cavity electro-optic coupler. Rates in MHz.
struct EoCavityParams {
  double gamma_p = 1.0;         // probe cavity total linewidth
  double gamma_s = 1.0;         // signal cavity total linewidth
  double zeta_p = 1.0;          // external coupling over total linewidth, probe
  double zeta_s = 1.0;          // same for the signal cavity
  double g_alpha = 0.0;         // pump-enhanced coupling |g alpha|
  double detuning_error = 0.0;  // delta = Delta + omega_S
  double omega_s = 1000.0;      // signal resonance, only used by the detuned model

  double cooperativity() const;
  // Sets g_alpha so that 4 g_alpha^2 / (gamma_s gamma_p) equals c.
  EoCavityParams& set_cooperativity(double c);
  void validate() const;
};

enum class Frame { cavity_resonance, pump_rotating };

// Samples on a strictly increasing frequency grid (MHz).
struct Spectrum {
  std::vector<double> omegas;
  std::vector<double> values;
  Frame frame = Frame::cavity_resonance;

  void validate() const;
};

// sqrt(kappa) e^{i theta_P} at detuning_error = 0, cavity-resonance frame.
Complex probe_transmissivity_amplitude(double omega, const EoCavityParams& p);

// sqrt(eta) e^{i theta_S} at detuning_error = 0, cavity-resonance frame.
Complex conversion_amplitude(double omega, const EoCavityParams& p);

// S(w) = C (-i w I - A)^{-1} B + D of the four-mode Langevin model in the
// pump-rotating frame. Outputs are (S_out, P_out, S_out^dag, P_out^dag);
// inputs are (S_in, S_E, P_in, P_E) followed by their conjugates.
ComplexMatrix detuned_transfer_matrix(double omega, const EoCavityParams& p);

// Coupler point read off the detuned transfer matrix at a cavity-resonance
// frame frequency. The frame shift is w -> w + omega_S with
// Delta = -omega_S + delta, and theta_P is taken as arg S_23.
CouplerPoint detuned_coupler_point(double omega, const EoCavityParams& p);

// Coupler point at omega: closed forms when detuning_error == 0, otherwise the
// detuned model.
CouplerPoint coupler_point(double omega, const EoCavityParams& p);

// Frequency of the conversion efficiency maximum, cavity-resonance frame.
double conversion_peak_frequency(const EoCavityParams& p);

// Linear grid of `points` samples spanning +-10 max(Gamma_P, Gamma_S) around
// the conversion peak.
std::vector<double> default_grid(const EoCavityParams& p, std::size_t points = 2001);

// eta(w) over the grid.
Spectrum efficiency_spectrum(const EoCavityParams& p, std::span<const double> grid);

// eta and kappa on the resonant closed forms through the batched kernels.
void resonant_efficiency_batch(const EoCavityParams& p, std::span<const double> grid,
                               std::span<double> eta, std::span<double> kappa);

// Infinite-squeezing EA efficiency at detuning_error = 0:
//   C Gamma_S^2 zeta_S / (Gamma_S^2 (C + 1 - zeta_P) + 4 w^2 (1 - zeta_P)).
double ea_efficiency_infinite(double omega, const EoCavityParams& p);

// Pointwise ea_efficiency over the coupler spectrum. g_in = +inf selects the
// closed infinite-squeezing form on resonance and eta / (1 - kappa) otherwise.
Spectrum ea_efficiency_spectrum(const EoCavityParams& p, double g_in,
                                std::span<const double> grid);

// Full width at half maximum by linear interpolation between samples.
// Throws NotUnimodal unless exactly two half-maximum crossings exist.
double half_power_bandwidth(const Spectrum& s);

}  // namespace transduce
