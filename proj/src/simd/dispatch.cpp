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

#include <cstdlib>
#include <string_view>

#include "transduce/errors.hpp"
#include "transduce/simd/kernels.hpp"

namespace transduce::simd {
namespace {

Backend choose_backend() {
  const char* env = std::getenv("TRANSDUCE_SIMD");
  const std::string_view request = env ? env : "";
  if (request == "scalar") return Backend::scalar;
  if (request == "avx2" && !avx2_supported()) return Backend::scalar;
  return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

void require_sizes(std::size_t expected, std::size_t got) {
  if (expected != got) throw DomainError("simd kernel: span sizes differ");
}

}  // namespace

bool avx2_supported() {
#if defined(TRANSDUCE_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() {
  static const Backend backend = choose_backend();
  return backend;
}

const char* backend_name(Backend backend) {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

void eo_resonant(Backend backend, const EoKernelParams& p, std::span<const double> omega,
                 std::span<double> eta, std::span<double> kappa) {
  require_sizes(omega.size(), eta.size());
  require_sizes(omega.size(), kappa.size());
#if defined(TRANSDUCE_HAVE_AVX2)
  if (backend == Backend::avx2 && avx2_supported()) {
    detail::eo_resonant_avx2(p, omega.data(), omega.size(), eta.data(), kappa.data());
    return;
  }
#endif
  (void)backend;
  detail::eo_resonant_scalar(p, omega.data(), omega.size(), eta.data(), kappa.data());
}

void pa_compose(Backend backend, std::span<const PaKernelStage> stages,
                std::span<const double> omega, std::span<double> m, std::span<double> n) {
  require_sizes(omega.size(), m.size());
  require_sizes(omega.size(), n.size());
#if defined(TRANSDUCE_HAVE_AVX2)
  if (backend == Backend::avx2 && avx2_supported()) {
    detail::pa_compose_avx2(stages.data(), stages.size(), omega.data(), omega.size(), m.data(),
                            n.data());
    return;
  }
#endif
  (void)backend;
  detail::pa_compose_scalar(stages.data(), stages.size(), omega.data(), omega.size(), m.data(),
                            n.data());
}

void ea_noise(Backend backend, double g_in, std::span<const double> eta,
              std::span<const double> kappa, std::span<const double> m, std::span<const double> n,
              std::span<double> eta_ea, std::span<double> n_b) {
  const std::size_t count = eta.size();
  for (std::size_t s : {kappa.size(), m.size(), n.size(), eta_ea.size(), n_b.size()}) {
    require_sizes(count, s);
  }
#if defined(TRANSDUCE_HAVE_AVX2)
  if (backend == Backend::avx2 && avx2_supported()) {
    detail::ea_noise_avx2(g_in, eta.data(), kappa.data(), m.data(), n.data(), count,
                          eta_ea.data(), n_b.data());
    return;
  }
#endif
  (void)backend;
  detail::ea_noise_scalar(g_in, eta.data(), kappa.data(), m.data(), n.data(), count,
                          eta_ea.data(), n_b.data());
}

}  // namespace transduce::simd
