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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "transduce/cavity_eo.hpp"
#include "transduce/protocol.hpp"

namespace transduce {

enum class PaRole { squeezer, antisqueezer };

// One doubly resonant parametric amplifier. g is pump power over threshold,
// half_linewidth in MHz.
struct PaStage {
  double g = 0.0;
  double half_linewidth = 1.0;
  PaRole role = PaRole::squeezer;

  void validate() const;
};

// Signal -> signal (mu) and idler-conjugate -> signal (nu) amplitudes of a
// two-mode squeeze at one frequency. |mu|^2 - |nu|^2 = 1.
struct Su11Amplitude {
  std::complex<double> mu{1.0, 0.0};
  std::complex<double> nu{0.0, 0.0};

  double gain() const { return std::norm(mu); }
  double commutator() const { return std::norm(mu) - std::norm(nu); }
};

double stage_gain(double omega, const PaStage& stage);

Su11Amplitude stage_amplitude(double omega, const PaStage& stage);

// Applies `next` after `first`.
Su11Amplitude compose(const Su11Amplitude& first, const Su11Amplitude& next);

// Stages are applied in list order.
Su11Amplitude array_amplitude(std::span<const PaStage> stages, double omega);

// Overall signal gain G'(omega) of the array.
double compose_array(std::span<const PaStage> stages, double omega);

// Two-periodic array starting with an antisqueezer.
std::vector<PaStage> alternating_array(std::span<const double> g,
                                       std::span<const double> half_linewidth);

// Added photons at the output probe for antisqueeze gain g_prime.
double mismatch_noise(double kappa, double g_in, double g_prime, PaRole role);

// Added photons for the signed array amplitudes m = |mu| and n = +-|nu|.
double mismatch_noise_amplitudes(double kappa, double g_in, double m, double n);

double noiseless_gain_target(double omega, const CouplerPoint& point, double g_in);

// Broadband rates below are in bits * MHz with omega in MHz.

double non_ea_rate(const EoCavityParams& cavity);

// EA rate with the noiseless antisqueezer G'*(omega).
double noiseless_rate(const EoCavityParams& cavity, double g_in);

// EA rate with a frequency-independent antisqueezer.
double constant_gain_rate(const EoCavityParams& cavity, double g_in, double g_prime);

double array_rate(const EoCavityParams& cavity, double g_in, std::span<const PaStage> stages);

struct ConstantGainScan {
  std::vector<double> relative_db;  // G' / G'*(omega = 0)
  std::vector<double> advantage;    // over non_ea_rate
  double best_advantage = 0.0;
  double best_relative_db = 0.0;
};

ConstantGainScan constant_gain_scan(const EoCavityParams& cavity, double g_in,
                                    double span_db = 3.0, std::size_t points = 601);

struct PaOptimizeOptions {
  std::size_t restarts = 16;
  std::size_t evals_per_dim = 400;
  std::size_t grid_points = 4001;
  bool parallel_restarts = true;
};

struct PaArrayResult {
  std::vector<PaStage> stages;
  double q_lb_rate = 0.0;
  double non_ea_rate = 0.0;
  double advantage = 0.0;
  // Grid objective of the best array for each depth 1..n_stages.
  std::vector<double> objective_by_depth;
  std::vector<std::vector<PaStage>> stages_by_depth;
  std::size_t evaluations = 0;
};

// Maximizes the EA lower-bound rate over stage gains and linewidths. Depth k
// is warm-started from the depth k-1 optimum plus an idle stage. The search
// runs on the trapezoid grid; the reported rates use adaptive quadrature.
PaArrayResult optimize_array(std::size_t n_stages, double g_in, const EoCavityParams& cavity,
                             std::uint64_t seed, const PaOptimizeOptions& options = {});

}  // namespace transduce
