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

#include <cmath>

#include "transduce/simd/kernels.hpp"

namespace transduce::simd::detail {

void eo_resonant_scalar(const EoKernelParams& p, const double* omega, std::size_t count,
                        double* eta, double* kappa) {
  const double opc = 1.0 + p.cooperativity;
  const double pp = p.gamma_p * p.gamma_s;
  const double sum_inv = 1.0 / p.gamma_p + 1.0 / p.gamma_s;
  const double inv_s = 1.0 / p.gamma_s;
  const double num = 4.0 * p.cooperativity * p.zeta_p * p.zeta_s;
  const double two_zp = 2.0 * p.zeta_p;
  for (std::size_t i = 0; i < count; ++i) {
    const double w = omega[i];
    const double tw = 2.0 * w;
    const double re = opc - (tw * tw) / pp;
    const double im = -(tw * sum_inv);
    const double den = re * re + im * im;
    const double b_im = -(tw * inv_s);
    const double kr = two_zp * (re + b_im * im) / den - 1.0;
    const double ki = two_zp * (b_im * re - im) / den;
    eta[i] = num / den;
    kappa[i] = kr * kr + ki * ki;
  }
}

void pa_compose_scalar(const PaKernelStage* stages, std::size_t n_stages, const double* omega,
                       std::size_t count, double* m, double* n) {
  for (std::size_t i = 0; i < count; ++i) {
    const double w2 = omega[i] * omega[i];
    double p = 1.0;
    double q = 0.0;
    for (std::size_t k = 0; k < n_stages; ++k) {
      const double a = stages[k].gamma * stages[k].gamma;
      const double g2 = stages[k].g * stages[k].g;
      const double dr = a * (1.0 - g2) - w2;
      const double mag = std::sqrt(dr * dr + 4.0 * a * w2);
      const double mu = (a * (1.0 + g2) + w2) / mag;
      const double nu = stages[k].sign * (2.0 * stages[k].g * a) / mag;
      const double np = mu * p + nu * q;
      const double nq = nu * p + mu * q;
      p = np;
      q = nq;
    }
    if (p < 0.0) {
      p = -p;
      q = -q;
    }
    m[i] = p;
    n[i] = q;
  }
}

void ea_noise_scalar(double g_in, const double* eta, const double* kappa, const double* m,
                     const double* n, std::size_t count, double* eta_ea, double* n_b) {
  const double gm = g_in - 1.0;
  const double rg = std::sqrt(g_in);
  for (std::size_t i = 0; i < count; ++i) {
    const double amp = std::sqrt(kappa[i] * gm) * m[i] + rg * n[i];
    eta_ea[i] = eta[i] * (m[i] * m[i]);
    n_b[i] = amp * amp;
  }
}

}  // namespace transduce::simd::detail
