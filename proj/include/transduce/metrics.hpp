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

#include <span>

#include "transduce/cavity_eo.hpp"
#include "transduce/numerics.hpp"

namespace transduce {

enum class EbpMethod { closed_form, residue, quadrature };

const char* ebp_method_name(EbpMethod method);

// Efficiency-bandwidth product, the integral of an efficiency spectrum over
// angular frequency (MHz).
struct EbpResult {
  double value = 0.0;
  EbpMethod method = EbpMethod::closed_form;
};

// Capacity reported in place of +inf when the efficiency is exactly 1.
inline constexpr double kDefaultCapacitySentinel = 60.0;

// Without squeezing: 2 pi C Gamma_P Gamma_S zeta_P zeta_S / ((C + 1)(Gamma_P + Gamma_S)).
double ebp_eo_closed(const EoCavityParams& p);

// Linewidth-optimized bound pi zeta_S zeta_P |g alpha|.
double ebp_eo_max(double g_alpha, double zeta_p, double zeta_s);

// Integral of ea_efficiency over the coupler spectrum by adaptive quadrature.
// g_in may be +inf; the result is the plain EBP at g_in = 1.
EbpResult ebp_quadrature(const EoCavityParams& p, double g_in);

// Closed EA form for zeta_P = zeta_S = 1 and finite G.
double ebp_ea_closed_unit_zeta(const EoCavityParams& p, double g_in);

// G -> infinity: pi C Gamma_S zeta_S / (2 sqrt((1 + C - zeta_P)(1 - zeta_P))).
// Throws Diverges at zeta_P = 1.
double ebp_ea_infinite(const EoCavityParams& p);

// EA EBP: closed form at unit coupling ratios, the infinite-squeezing form for
// g_in = +inf, and quadrature otherwise. Requires detuning_error = 0 except on
// the quadrature path.
EbpResult ebp_ea(const EoCavityParams& p, double g_in);

// Binary entropy-like g(x) = (x + 1) log2(x + 1) - x log2 x, g(0) = 0.
double thermal_entropy(double x);

// max(log2(eta / (1 - eta)), 0) in bits per use; eta = 1 gives `sentinel`.
double q1_pointwise(double eta, double sentinel = kDefaultCapacitySentinel);

// max(0, log2(eta / |1 - eta|) - g(n_b / |1 - eta|)). eta above 1 is accepted
// and read as an amplifying channel; eta = 1 gives `sentinel`.
double q_lb_pointwise(double eta_ea, double n_b, double sentinel = kDefaultCapacitySentinel);

// Integral of a nonnegative rate density over the line divided by 2 pi
// (bits x MHz for rates in bits per use). The support is located from sign
// changes on `scan`, refined by bisection, extended outward past the scan ends
// when needed, and each piece is integrated adaptively.
double broadband_rate(const RealFunction& rate, std::span<const double> scan);

// Trapezoid versions on sampled spectra.
double q1_broadband(const Spectrum& eta);
double q_lb_broadband(const Spectrum& eta_ea, const Spectrum& n_b);

// Adaptive version with exact threshold crossings.
double q1_broadband(const RealFunction& eta, std::span<const double> scan);

// Cooperativity at which the on-resonance efficiency reaches 1/2:
//   -1 + 4 zs zp - sqrt(8 zs zp (2 zs zp - 1)).
// Throws NoThreshold when 2 zeta_S zeta_P < 1.
double c_threshold(double zeta_p, double zeta_s);

// Same with squeezing gain G; equals c_threshold at G = 1 and
// 1 / (sqrt(G) + sqrt(G + 1))^2 at unit coupling ratios.
double c_threshold_ea(double zeta_p, double zeta_s, double g_in);

}  // namespace transduce
