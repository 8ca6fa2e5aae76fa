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

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "transduce/errors.hpp"
#include "transduce/protocol.hpp"

namespace transduce {
namespace {

// Mode order: signal, probe, ancilla, coupler environment, ancilla-loss environment.
constexpr int kModes = 5;
constexpr int kS = 0;
constexpr int kP = 1;
constexpr int kA = 2;
constexpr int kE = 3;
constexpr int kF = 4;

using Cmat = Eigen::Matrix<std::complex<double>, kModes, kModes>;
using Rmat = Eigen::Matrix<double, 2 * kModes, 2 * kModes>;
using Rvec = Eigen::Matrix<double, 2 * kModes, 1>;

// Real representation of a' = U a + W a^dag on (x_1..x_n, p_1..p_n),
// with a = (x + i p) / sqrt(2).
Rmat symplectic(const Cmat& u, const Cmat& w) {
  const Cmat plus = u + w;
  const Cmat minus = u - w;
  Rmat s;
  s.topLeftCorner<kModes, kModes>() = plus.real();
  s.topRightCorner<kModes, kModes>() = -minus.imag();
  s.bottomLeftCorner<kModes, kModes>() = plus.imag();
  s.bottomRightCorner<kModes, kModes>() = minus.real();
  return s;
}

Rmat two_mode_squeeze(int m1, int m2, double gain, double sign) {
  Cmat u = Cmat::Identity();
  Cmat w = Cmat::Zero();
  u(m1, m1) = std::sqrt(gain);
  u(m2, m2) = std::sqrt(gain);
  w(m1, m2) = sign * std::sqrt(gain - 1.0);
  w(m2, m1) = sign * std::sqrt(gain - 1.0);
  return symplectic(u, w);
}

// Unitary on (probe, signal, environment) whose probe row is the coupler relation.
Rmat coupler(const CouplerPoint& point) {
  const std::complex<double> i{0.0, 1.0};
  Eigen::Matrix3cd basis;
  basis.row(0) << std::exp(i * point.theta_p) * std::sqrt(point.kappa),
      std::exp(i * point.theta_s) * std::sqrt(point.eta), std::sqrt(point.kappa_e());
  basis.row(0) /= basis.row(0).norm();
  int filled = 1;
  for (int k = 0; k < 3 && filled < 3; ++k) {
    Eigen::RowVector3cd v = Eigen::RowVector3cd::Zero();
    v(k) = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j < filled; ++j) v -= basis.row(j).dot(v) * basis.row(j);
    }
    if (v.norm() > 1e-6) basis.row(filled++) = v / v.norm();
  }
  const int order[3] = {kP, kS, kE};
  Cmat u = Cmat::Identity();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) u(order[r], order[c]) = basis(r, c);
  }
  return symplectic(u, Cmat::Zero());
}

Rmat ancilla_loss(double kappa_a) {
  Cmat u = Cmat::Identity();
  const double t = std::sqrt(kappa_a);
  const double r = std::sqrt(1.0 - kappa_a);
  u(kA, kA) = t;
  u(kA, kF) = r;
  u(kF, kA) = -r;
  u(kF, kF) = t;
  return symplectic(u, Cmat::Zero());
}

Rmat probe_phase(double phi) {
  Cmat u = Cmat::Identity();
  u(kP, kP) = std::polar(1.0, phi);
  return symplectic(u, Cmat::Zero());
}

struct Propagated {
  Rmat cov;
  Rvec mean;
};

Propagated propagate(const CouplerPoint& point, const SqueezerSetting& setting,
                     const AncillaLoss& loss, const OracleInputs& inputs) {
  point.validate();
  loss.validate();
  if (!(setting.g_in >= 1.0) || !(setting.g_out >= 1.0) || std::isinf(setting.g_in) ||
      std::isinf(setting.g_out)) {
    throw DomainError("covariance_oracle: gains must be finite and >= 1");
  }
  if (!(inputs.probe_thermal >= 0.0) || !(inputs.ancilla_thermal >= 0.0)) {
    throw DomainError("covariance_oracle: thermal occupations must be >= 0");
  }
  const Rmat total = two_mode_squeeze(kP, kA, setting.g_out, -1.0) * probe_phase(-point.theta_p) *
                     ancilla_loss(loss.kappa_a) * coupler(point) *
                     two_mode_squeeze(kP, kA, setting.g_in, 1.0);
  Rmat cov0 = 0.5 * Rmat::Identity();
  for (int block = 0; block < 2; ++block) {
    cov0(block * kModes + kP, block * kModes + kP) += inputs.probe_thermal;
    cov0(block * kModes + kA, block * kModes + kA) += inputs.ancilla_thermal;
  }
  Rvec mean0 = Rvec::Zero();
  mean0(kS) = std::sqrt(2.0);  // coherent amplitude alpha = 1
  return {total * cov0 * total.transpose(), total * mean0};
}

}  // namespace

EaPointResult covariance_oracle(const CouplerPoint& point, const SqueezerSetting& setting,
                                const AncillaLoss& loss, const OracleInputs& inputs) {
  const Propagated out = propagate(point, setting, loss, inputs);
  const double mx = out.mean(kP);
  const double mp = out.mean(kModes + kP);
  EaPointResult r;
  r.eta_ea = 0.5 * (mx * mx + mp * mp);
  r.n_b = 0.5 * (out.cov(kP, kP) + out.cov(kModes + kP, kModes + kP)) - 0.5;
  return r;
}

double covariance_oracle_ancilla_signal_gain(const CouplerPoint& point,
                                             const SqueezerSetting& setting,
                                             const AncillaLoss& loss) {
  const Propagated out = propagate(point, setting, loss, {});
  const double mx = out.mean(kA);
  const double mp = out.mean(kModes + kA);
  return 0.5 * (mx * mx + mp * mp);
}

}  // namespace transduce
