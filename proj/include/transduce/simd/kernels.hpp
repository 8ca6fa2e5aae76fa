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

// Batched inner loops shared by the spectrum and PA-array code. Each kernel
// has a portable scalar reference and an AVX2 variant; the variant in use is
// chosen once per process from CPU support, and TRANSDUCE_SIMD=scalar|avx2
// overrides the choice. Both variants perform the same operations in the same
// order, without fused multiply-add.

namespace transduce::simd {

enum class Backend { scalar, avx2 };

bool avx2_supported();
Backend active_backend();
const char* backend_name(Backend backend);

// Resonant electro-optic coupler, cavity-resonance frame.
struct EoKernelParams {
  double gamma_p = 1.0;
  double gamma_s = 1.0;
  double zeta_p = 1.0;
  double zeta_s = 1.0;
  double cooperativity = 0.0;
};

// eta(w) and kappa(w) for every w in omega.
void eo_resonant(Backend backend, const EoKernelParams& p, std::span<const double> omega,
                 std::span<double> eta, std::span<double> kappa);

// One parametric-amplifier stage. sign is +1 for a squeezer, -1 for an antisqueezer.
struct PaKernelStage {
  double g = 0.0;
  double gamma = 1.0;
  double sign = 1.0;
};

// Real parts (m, n) of the composed (signal, idler^dagger) matrix row once the
// common phase is removed, normalized so that m > 0. The overall gain is m^2.
void pa_compose(Backend backend, std::span<const PaKernelStage> stages,
                std::span<const double> omega, std::span<double> m, std::span<double> n);

// EA efficiency eta * m^2 and thermal background
// (sqrt(kappa (G - 1)) m + sqrt(G) n)^2 of the output probe.
void ea_noise(Backend backend, double g_in, std::span<const double> eta,
              std::span<const double> kappa, std::span<const double> m, std::span<const double> n,
              std::span<double> eta_ea, std::span<double> n_b);

inline void eo_resonant(const EoKernelParams& p, std::span<const double> omega,
                        std::span<double> eta, std::span<double> kappa) {
  eo_resonant(active_backend(), p, omega, eta, kappa);
}

inline void pa_compose(std::span<const PaKernelStage> stages, std::span<const double> omega,
                       std::span<double> m, std::span<double> n) {
  pa_compose(active_backend(), stages, omega, m, n);
}

inline void ea_noise(double g_in, std::span<const double> eta, std::span<const double> kappa,
                     std::span<const double> m, std::span<const double> n,
                     std::span<double> eta_ea, std::span<double> n_b) {
  ea_noise(active_backend(), g_in, eta, kappa, m, n, eta_ea, n_b);
}

namespace detail {

void eo_resonant_scalar(const EoKernelParams& p, const double* omega, std::size_t count,
                        double* eta, double* kappa);
void pa_compose_scalar(const PaKernelStage* stages, std::size_t n_stages, const double* omega,
                       std::size_t count, double* m, double* n);
void ea_noise_scalar(double g_in, const double* eta, const double* kappa, const double* m,
                     const double* n, std::size_t count, double* eta_ea, double* n_b);

void eo_resonant_avx2(const EoKernelParams& p, const double* omega, std::size_t count,
                      double* eta, double* kappa);
void pa_compose_avx2(const PaKernelStage* stages, std::size_t n_stages, const double* omega,
                     std::size_t count, double* m, double* n);
void ea_noise_avx2(double g_in, const double* eta, const double* kappa, const double* m,
                   const double* n, std::size_t count, double* eta_ea, double* n_b);

}  // namespace detail
}  // namespace transduce::simd
