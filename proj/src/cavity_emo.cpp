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

#include "transduce/cavity_emo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "transduce/errors.hpp"

namespace transduce {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

struct Sums {
  double a;
  double b;
  double c;
};

Sums sums(const EmoCavityParams& p) {
  const double gp2 = p.g_p * p.g_p;
  const double gs2 = p.g_s * p.g_s;
  return {4.0 * gp2 + 4.0 * gs2 + p.gamma_m * p.gamma_p + p.gamma_m * p.gamma_s +
              p.gamma_p * p.gamma_s,
          4.0 * gs2 * p.gamma_p + 4.0 * gp2 * p.gamma_s + p.gamma_m * p.gamma_p * p.gamma_s,
          p.gamma_m + p.gamma_p + p.gamma_s};
}

double numerator(const EmoCavityParams& p) {
  return p.g_p * p.g_p * p.g_s * p.g_s * p.gamma_p * p.gamma_s * p.zeta_p * p.zeta_s;
}

}  // namespace

EmoCavityParams& EmoCavityParams::set_red_sideband() {
  delta_p = -omega_m;
  delta_s = -omega_m;
  return *this;
}

double EmoCavityParams::cooperativity_s() const { return 4.0 * g_s * g_s / (gamma_s * gamma_m); }

double EmoCavityParams::cooperativity_p() const { return 4.0 * g_p * g_p / (gamma_p * gamma_m); }

void EmoCavityParams::validate() const {
  for (double g : {gamma_p, gamma_s, gamma_m, omega_m}) {
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw DomainError("EmoCavityParams: linewidths and omega_m must be positive and finite");
    }
  }
  if (!(zeta_p >= 0.0 && zeta_p <= 1.0) || !(zeta_s >= 0.0 && zeta_s <= 1.0)) {
    throw DomainError("EmoCavityParams: coupling ratios must lie in [0, 1]");
  }
  if (!(g_p >= 0.0) || !(g_s >= 0.0) || !std::isfinite(g_p) || !std::isfinite(g_s)) {
    throw DomainError("EmoCavityParams: couplings must be finite and >= 0");
  }
  if (!std::isfinite(delta_p) || !std::isfinite(delta_s)) {
    throw DomainError("EmoCavityParams: detunings must be finite");
  }
}

ComplexMatrix emo_transfer_matrix(double omega, const EmoCavityParams& p, EmoCoupling coupling) {
  p.validate();
  const Complex gs = kI * p.g_s;
  const Complex gp = kI * p.g_p;
  const double keep = coupling == EmoCoupling::full ? 1.0 : 0.0;
  const Complex gs_x = keep * gs;
  const Complex gp_x = keep * gp;
  const ComplexMatrix a = ComplexMatrix::from_rows({
      {-p.gamma_s / 2 + kI * p.delta_s, 0.0, gs, 0.0, 0.0, gs_x},
      {0.0, -p.gamma_p / 2 + kI * p.delta_p, gp, 0.0, 0.0, gp_x},
      {gs, gp, -p.gamma_m / 2 - kI * p.omega_m, gs_x, gp_x, 0.0},
      {0.0, 0.0, -gs_x, -p.gamma_s / 2 - kI * p.delta_s, 0.0, -gs},
      {0.0, 0.0, -gp_x, 0.0, -p.gamma_p / 2 - kI * p.delta_p, -gp},
      {-gs_x, -gp_x, 0.0, -gs, -gp, -p.gamma_m / 2 + kI * p.omega_m},
  });
  const double gsc = std::sqrt(p.zeta_s * p.gamma_s);
  const double gs0 = std::sqrt((1.0 - p.zeta_s) * p.gamma_s);
  const double gpc = std::sqrt(p.zeta_p * p.gamma_p);
  const double gp0 = std::sqrt((1.0 - p.zeta_p) * p.gamma_p);
  const double gm = std::sqrt(p.gamma_m);
  ComplexMatrix b(6, 10);
  b(0, 0) = gsc;
  b(0, 1) = gs0;
  b(1, 2) = gpc;
  b(1, 3) = gp0;
  b(2, 4) = gm;
  b(3, 5) = gsc;
  b(3, 6) = gs0;
  b(4, 7) = gpc;
  b(4, 8) = gp0;
  b(5, 9) = gm;
  ComplexMatrix c(4, 6);
  c(0, 0) = gsc;
  c(1, 1) = gpc;
  c(2, 3) = gsc;
  c(3, 4) = gpc;
  ComplexMatrix d(4, 10);
  d(0, 0) = -1.0;
  d(1, 2) = -1.0;
  d(2, 5) = -1.0;
  d(3, 7) = -1.0;
  const ComplexMatrix m = (-kI * omega) * ComplexMatrix::identity(6) - a;
  return c * solve_linear_complex(m, b) + d;
}

CouplerPoint emo_coupler_point(double delta_omega, const EmoCavityParams& p) {
  const ComplexMatrix s =
      emo_transfer_matrix(delta_omega + p.omega_m, p, EmoCoupling::rotating_wave);
  return CouplerPoint::make(std::norm(s(1, 0)), std::norm(s(1, 2)), std::arg(s(1, 0)),
                            std::arg(s(1, 2)));
}

double emo_efficiency(double delta_omega, const EmoCavityParams& p) {
  p.validate();
  const Sums s = sums(p);
  const double x2 = delta_omega * delta_omega;
  const double t1 = s.a - 4.0 * x2;
  const double t2 = s.b - 4.0 * x2 * s.c;
  return 64.0 * numerator(p) / (4.0 * x2 * t1 * t1 + t2 * t2);
}

std::array<double, 4> emo_denominator_cubic(const EmoCavityParams& p) {
  p.validate();
  const Sums s = sums(p);
  return {64.0, -32.0 * s.a + 16.0 * s.c * s.c, 4.0 * s.a * s.a - 8.0 * s.b * s.c, s.b * s.b};
}

double emo_ebp_quadrature(const EmoCavityParams& p) {
  p.validate();
  const double scale = std::max({p.gamma_p, p.gamma_s, p.g_p, p.g_s});
  return integrate_infinite([&](double x) { return emo_efficiency(x, p); }, scale).value;
}

EbpResult emo_ebp(const EmoCavityParams& p) {
  p.validate();
  const double n = numerator(p);
  if (n == 0.0) return {0.0, EbpMethod::residue};
  const auto cubic = emo_denominator_cubic(p);
  const auto u = polynomial_roots(cubic);
  // Poles at delta_omega = +-i a_k with a_k^2 = -u_k.
  std::array<Complex, 3> a;
  for (std::size_t k = 0; k < 3; ++k) {
    a[k] = std::sqrt(-u[k]);
    if (a[k].real() < 0.0) a[k] = -a[k];
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (std::abs(a[i] - a[j]) <= 1e-9 * std::max(std::abs(a[i]), std::abs(a[j]))) {
        return {emo_ebp_quadrature(p), EbpMethod::quadrature};
      }
    }
  }
  const Complex value = kPi * n * (a[0] + a[1] + a[2]) /
                        (a[0] * a[1] * a[2] * (a[0] + a[1]) * (a[0] + a[2]) * (a[1] + a[2]));
  if (std::abs(value.imag()) > 1e-9 * std::abs(value)) {
    throw NumericalError("emo_ebp: residue sum is not real");
  }
  return {value.real(), EbpMethod::residue};
}

EbpResult emo_ebp_small_mechanical_loss(EmoCavityParams p) {
  const double base = std::min(p.gamma_s, p.gamma_p);
  p.gamma_m = 1e-5 * base;
  const double coarse = emo_ebp(p).value;
  p.gamma_m = 1e-6 * base;
  const EbpResult fine = emo_ebp(p);
  if (std::abs(fine.value - coarse) > 1e-3 * std::abs(fine.value)) {
    throw NonConvergent("emo_ebp_small_mechanical_loss: limit not settled");
  }
  return fine;
}

double emo_ebp_upper_bound(double g_p, double g_s, double zeta_p, double zeta_s) {
  if (!(g_p > 0.0) || !(g_s > 0.0)) throw DomainError("emo_ebp_upper_bound: couplings must be positive");
  if (!(zeta_p >= 0.0 && zeta_p <= 1.0) || !(zeta_s >= 0.0 && zeta_s <= 1.0)) {
    throw DomainError("emo_ebp_upper_bound: coupling ratios must lie in [0, 1]");
  }
  const double sum = std::pow(g_p * g_s, 0.75) + std::pow(g_p * std::pow(g_s, 5.0), 0.25) +
                     std::pow(g_p, 1.5) + std::pow(g_s, 1.5);
  return 4.0 * kPi * std::pow(g_p, 0.125) * zeta_p * zeta_s * sum / std::pow(g_s, 0.625);
}

double emo_symmetric_max(double g, double zeta_p, double zeta_s) {
  if (!(g >= 0.0)) throw DomainError("emo_symmetric_max: coupling must be >= 0");
  if (!(zeta_p >= 0.0 && zeta_p <= 1.0) || !(zeta_s >= 0.0 && zeta_s <= 1.0)) {
    throw DomainError("emo_symmetric_max: coupling ratios must lie in [0, 1]");
  }
  return std::sqrt(107.0 + 51.0 * std::sqrt(17.0)) / 32.0 * kPi * zeta_p * zeta_s * g;
}

}  // namespace transduce
