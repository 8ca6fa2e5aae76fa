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

#include <array>

#include "transduce/metrics.hpp"
#include "transduce/numerics.hpp"
#include "transduce/protocol.hpp"

namespace transduce {

// Electro-optomechanical coupler mediated by a mechanical mode. Rates in MHz;
// g_p and g_s are the pump-enhanced couplings to the mechanics.
struct EmoCavityParams {
  double gamma_p = 1.0;
  double gamma_s = 1.0;
  double gamma_m = 1e-3;
  double zeta_p = 1.0;
  double zeta_s = 1.0;
  double g_p = 0.0;
  double g_s = 0.0;
  double omega_m = 1e4;
  double delta_p = -1e4;
  double delta_s = -1e4;

  // Pumps on the red sideband, delta_p = delta_s = -omega_m.
  EmoCavityParams& set_red_sideband();
  double cooperativity_s() const;
  double cooperativity_p() const;
  void validate() const;
};

enum class EmoCoupling {
  full,           // all linearized terms, including the blue-sideband pairs
  rotating_wave,  // beamsplitter terms only
};

// S(w) = C (-i w I - A)^{-1} B + D in the pump frame (mechanics stationary).
// Outputs (S_out, P_out, S_out^dag, P_out^dag); inputs (S_in, S_E, P_in, P_E,
// M_E) followed by their conjugates.
ComplexMatrix emo_transfer_matrix(double omega, const EmoCavityParams& p,
                                  EmoCoupling coupling = EmoCoupling::full);

// Coupler point at delta_omega = omega - omega_m under the rotating-wave
// coupling, where the map is passive.
CouplerPoint emo_coupler_point(double delta_omega, const EmoCavityParams& p);

// Resolved-sideband conversion efficiency at delta_omega = omega - omega_m.
double emo_efficiency(double delta_omega, const EmoCavityParams& p);

// The denominator of emo_efficiency as a cubic in u = delta_omega^2,
// highest degree first.
std::array<double, 4> emo_denominator_cubic(const EmoCavityParams& p);

// Integral of emo_efficiency over delta_omega by residues at the three
// upper-half-plane poles; quadrature when two poles coincide within 1e-9.
EbpResult emo_ebp(const EmoCavityParams& p);

// Same integral by adaptive quadrature.
double emo_ebp_quadrature(const EmoCavityParams& p);

// emo_ebp evaluated at gamma_m = 1e-6 min(gamma_s, gamma_p), cross-checked
// against gamma_m = 1e-5 min(gamma_s, gamma_p). Throws NonConvergent when the
// two differ by more than 1e-3 relative.
EbpResult emo_ebp_small_mechanical_loss(EmoCavityParams p);

// 4 pi g_p^{1/8} zp zs ((g_p g_s)^{3/4} + (g_p g_s^5)^{1/4} + g_p^{3/2} + g_s^{3/2}) / g_s^{5/8}.
double emo_ebp_upper_bound(double g_p, double g_s, double zeta_p, double zeta_s);

// sqrt(107 + 51 sqrt(17)) / 32 * pi * zp zs g.
double emo_symmetric_max(double g, double zeta_p, double zeta_s);

}  // namespace transduce
