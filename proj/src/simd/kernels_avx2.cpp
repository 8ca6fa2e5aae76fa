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

#include <immintrin.h>

#include <cmath>

#include "transduce/simd/kernels.hpp"

namespace transduce::simd::detail {
namespace {

inline __m256d set(double v) { return _mm256_set1_pd(v); }

}  // namespace

void eo_resonant_avx2(const EoKernelParams& p, const double* omega, std::size_t count,
                      double* eta, double* kappa) {
  const double opc_s = 1.0 + p.cooperativity;
  const double pp_s = p.gamma_p * p.gamma_s;
  const double sum_inv_s = 1.0 / p.gamma_p + 1.0 / p.gamma_s;
  const double inv_s_s = 1.0 / p.gamma_s;
  const double num_s = 4.0 * p.cooperativity * p.zeta_p * p.zeta_s;
  const double two_zp_s = 2.0 * p.zeta_p;
  const __m256d opc = set(opc_s);
  const __m256d pp = set(pp_s);
  const __m256d sum_inv = set(sum_inv_s);
  const __m256d inv_s = set(inv_s_s);
  const __m256d num = set(num_s);
  const __m256d two_zp = set(two_zp_s);
  const __m256d two = set(2.0);
  const __m256d one = set(1.0);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d w = _mm256_loadu_pd(omega + i);
    const __m256d tw = _mm256_mul_pd(two, w);
    const __m256d re = _mm256_sub_pd(opc, _mm256_div_pd(_mm256_mul_pd(tw, tw), pp));
    const __m256d im = _mm256_sub_pd(zero, _mm256_mul_pd(tw, sum_inv));
    const __m256d den = _mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im));
    const __m256d b_im = _mm256_sub_pd(zero, _mm256_mul_pd(tw, inv_s));
    const __m256d kr = _mm256_sub_pd(
        _mm256_div_pd(_mm256_mul_pd(two_zp, _mm256_add_pd(re, _mm256_mul_pd(b_im, im))), den),
        one);
    const __m256d ki = _mm256_div_pd(
        _mm256_mul_pd(two_zp, _mm256_sub_pd(_mm256_mul_pd(b_im, re), im)), den);
    _mm256_storeu_pd(eta + i, _mm256_div_pd(num, den));
    _mm256_storeu_pd(kappa + i, _mm256_add_pd(_mm256_mul_pd(kr, kr), _mm256_mul_pd(ki, ki)));
  }
  if (i < count) eo_resonant_scalar(p, omega + i, count - i, eta + i, kappa + i);
}

void pa_compose_avx2(const PaKernelStage* stages, std::size_t n_stages, const double* omega,
                     std::size_t count, double* m, double* n) {
  const __m256d one = set(1.0);
  const __m256d two = set(2.0);
  const __m256d four = set(4.0);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d w = _mm256_loadu_pd(omega + i);
    const __m256d w2 = _mm256_mul_pd(w, w);
    __m256d p = one;
    __m256d q = zero;
    for (std::size_t k = 0; k < n_stages; ++k) {
      const __m256d a = set(stages[k].gamma * stages[k].gamma);
      const __m256d g2 = set(stages[k].g * stages[k].g);
      const __m256d dr = _mm256_sub_pd(_mm256_mul_pd(a, _mm256_sub_pd(one, g2)), w2);
      const __m256d mag = _mm256_sqrt_pd(_mm256_add_pd(
          _mm256_mul_pd(dr, dr), _mm256_mul_pd(_mm256_mul_pd(four, a), w2)));
      const __m256d mu =
          _mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(a, _mm256_add_pd(one, g2)), w2), mag);
      const __m256d nu = _mm256_mul_pd(
          set(stages[k].sign),
          _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(two, set(stages[k].g)), a), mag));
      const __m256d np = _mm256_add_pd(_mm256_mul_pd(mu, p), _mm256_mul_pd(nu, q));
      const __m256d nq = _mm256_add_pd(_mm256_mul_pd(nu, p), _mm256_mul_pd(mu, q));
      p = np;
      q = nq;
    }
    const __m256d negative = _mm256_cmp_pd(p, zero, _CMP_LT_OQ);
    const __m256d sign_bit = _mm256_and_pd(negative, set(-0.0));
    _mm256_storeu_pd(m + i, _mm256_xor_pd(p, sign_bit));
    _mm256_storeu_pd(n + i, _mm256_xor_pd(q, sign_bit));
  }
  if (i < count) pa_compose_scalar(stages, n_stages, omega + i, count - i, m + i, n + i);
}

void ea_noise_avx2(double g_in, const double* eta, const double* kappa, const double* m,
                   const double* n, std::size_t count, double* eta_ea, double* n_b) {
  const __m256d gm = set(g_in - 1.0);
  const __m256d rg = set(std::sqrt(g_in));
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d mv = _mm256_loadu_pd(m + i);
    const __m256d amp =
        _mm256_add_pd(_mm256_mul_pd(_mm256_sqrt_pd(_mm256_mul_pd(_mm256_loadu_pd(kappa + i), gm)), mv),
                      _mm256_mul_pd(rg, _mm256_loadu_pd(n + i)));
    _mm256_storeu_pd(eta_ea + i, _mm256_mul_pd(_mm256_loadu_pd(eta + i), _mm256_mul_pd(mv, mv)));
    _mm256_storeu_pd(n_b + i, _mm256_mul_pd(amp, amp));
  }
  if (i < count) ea_noise_scalar(g_in, eta + i, kappa + i, m + i, n + i, count - i, eta_ea + i, n_b + i);
}

}  // namespace transduce::simd::detail
