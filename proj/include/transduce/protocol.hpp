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

namespace transduce {

// Single-frequency beamsplitter model of the signal-probe coupler.
//   P' = e^{i theta_p} sqrt(kappa) P + e^{i theta_s} sqrt(eta) S + sqrt(kappa_e) E
// kappa_e is derived from eta and kappa, never stored.
struct CouplerPoint {
  double eta = 0.0;      // signal -> probe conversion efficiency
  double kappa = 1.0;    // probe transmissivity
  double theta_s = 0.0;  // radians
  double theta_p = 0.0;  // radians

  // Validating constructor: eta, kappa in [0, 1] and eta + kappa <= 1 + 1e-12.
  static CouplerPoint make(double eta, double kappa, double theta_s = 0.0,
                           double theta_p = 0.0);
  // Builds the point from eta and the intrinsic loss instead of kappa.
  static CouplerPoint from_loss(double eta, double kappa_e);

  double kappa_e() const;
  void validate() const;
};

// Two-mode squeezer gain G before the coupler and antisqueezer gain G' after,
// both linear and >= 1.
struct SqueezerSetting {
  double g_in = 1.0;
  double g_out = 1.0;
};

struct EaPointResult {
  double eta_ea = 0.0;
  double n_b = 0.0;
};

// Coefficients of the output probe on (signal, initial probe, environment,
// initial ancilla^dagger).
struct BogoliubovCoefficients {
  std::complex<double> c_signal;
  std::complex<double> c_probe_vac;
  std::complex<double> c_env;
  std::complex<double> c_ancilla_conj;

  // |c_S|^2 + |c_P0|^2 + |c_E|^2 - |c_A0^dag|^2, equal to 1 for a valid map.
  double commutator() const;
};

// Storage efficiency of the ancilla between squeezer and antisqueezer.
struct AncillaLoss {
  double kappa_a = 1.0;
  void validate() const;
};

double gain_from_db(double db);
double gain_to_db(double gain);

// Antisqueezer gain that returns the output probe to vacuum,
// G'* = 1 / (1 - kappa + kappa / G). G may be +infinity.
double optimal_antisqueeze_gain(double kappa, double g_in);

// Noiseless EA efficiency eta G / (G (1 - kappa) + kappa). G may be +infinity.
// Results up to 1e-12 above 1 are clamped; larger excesses throw DomainError.
double ea_efficiency(const CouplerPoint& point, double g_in);

// Output-probe Bogoliubov coefficients for arbitrary (G, G'), with the
// antisqueezer compensating the probe phase by -theta_p.
BogoliubovCoefficients output_coefficients(const CouplerPoint& point,
                                           const SqueezerSetting& setting);

// |coefficient of S^dagger|^2 in the discarded ancilla output at G' = G'*,
// eta_EA * kappa * (1 - 1/G).
double ancilla_output_signal_gain(const CouplerPoint& point, double g_in);

// Thermal background of the output probe with a lossy ancilla,
//   N_B = (sqrt((G-1) G' kappa) - sqrt((G'-1) G kappa_A))^2 + (G'-1)(1-kappa_A).
double lossy_noise(const CouplerPoint& point, const SqueezerSetting& setting,
                   const AncillaLoss& loss);

// Closed-form G' minimizing lossy_noise; reduces to optimal_antisqueeze_gain
// when kappa_A = 1.
double lossy_optimal_gain(double kappa, double g_in, const AncillaLoss& loss);

// Thermal occupations of the initial probe and ancilla for the oracle.
struct OracleInputs {
  double probe_thermal = 0.0;
  double ancilla_thermal = 0.0;
};

// Independent check of the analytic relations above: propagates the covariance
// matrix and mean vector of the five-mode Gaussian state (signal, probe,
// ancilla, coupler environment, ancilla-loss environment) through explicit
// symplectic maps in the x/p convention with vacuum variance 1/2. The signal
// carries a coherent test amplitude; the result is the measured power
// transmissivity signal -> output probe and the added photon number of the
// output probe, (V_x + V_p)/2 - 1/2.
EaPointResult covariance_oracle(const CouplerPoint& point, const SqueezerSetting& setting,
                                const AncillaLoss& loss, const OracleInputs& inputs = {});

// Power gain from the signal into the discarded ancilla output, measured by
// the same Gaussian propagation.
double covariance_oracle_ancilla_signal_gain(const CouplerPoint& point,
                                             const SqueezerSetting& setting,
                                             const AncillaLoss& loss);

}  // namespace transduce
