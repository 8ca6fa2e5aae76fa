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

#include "transduce/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "transduce/errors.hpp"

namespace transduce {
namespace {

constexpr double kSlack = 1e-12;

void require_gain(double g, const char* what) {
  if (!(g >= 1.0)) throw DomainError(std::string(what) + ": gain must be >= 1");
}

void require_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

CouplerPoint CouplerPoint::make(double eta, double kappa, double theta_s, double theta_p) {
  CouplerPoint p{eta, kappa, theta_s, theta_p};
  p.validate();
  return p;
}

CouplerPoint CouplerPoint::from_loss(double eta, double kappa_e) {
  require_unit(kappa_e, "CouplerPoint: kappa_e");
  return make(eta, std::max(0.0, 1.0 - eta - kappa_e));
}

double CouplerPoint::kappa_e() const { return std::clamp(1.0 - eta - kappa, 0.0, 1.0); }

void CouplerPoint::validate() const {
  require_unit(eta, "CouplerPoint: eta");
  require_unit(kappa, "CouplerPoint: kappa");
  if (eta + kappa > 1.0 + kSlack) throw DomainError("CouplerPoint: eta + kappa exceeds 1");
  if (!std::isfinite(theta_s) || !std::isfinite(theta_p)) {
    throw DomainError("CouplerPoint: phases must be finite");
  }
}

double BogoliubovCoefficients::commutator() const {
  return std::norm(c_signal) + std::norm(c_probe_vac) + std::norm(c_env) -
         std::norm(c_ancilla_conj);
}

void AncillaLoss::validate() const {
  if (!(kappa_a > 0.0 && kappa_a <= 1.0)) {
    throw DomainError("AncillaLoss: kappa_a must lie in (0, 1]");
  }
}

double gain_from_db(double db) {
  if (std::isinf(db) && db > 0) return std::numeric_limits<double>::infinity();
  if (!std::isfinite(db)) throw DomainError("gain_from_db: dB value must be finite or +inf");
  return std::pow(10.0, db / 10.0);
}

double gain_to_db(double gain) {
  if (!(gain > 0.0)) throw DomainError("gain_to_db: gain must be positive");
  return 10.0 * std::log10(gain);
}

double optimal_antisqueeze_gain(double kappa, double g_in) {
  require_unit(kappa, "optimal_antisqueeze_gain: kappa");
  require_gain(g_in, "optimal_antisqueeze_gain");
  const double inv_g = std::isinf(g_in) ? 0.0 : 1.0 / g_in;
  return 1.0 / (1.0 - kappa + kappa * inv_g);
}

#ifdef TRANSDUCE_MUTATE_EA_EFFICIENCY
constexpr double kUnitTransmission = 1.001;
#else
constexpr double kUnitTransmission = 1.0;
#endif

double ea_efficiency(const CouplerPoint& point, double g_in) {
  point.validate();
  require_gain(g_in, "ea_efficiency");
  double value;
  if (std::isinf(g_in)) {
    const double loss = kUnitTransmission - point.kappa;
    value = loss > 0.0 ? point.eta / loss : 0.0;
  } else {
    value = point.eta * g_in / (g_in * (kUnitTransmission - point.kappa) + point.kappa);
  }
  if (value > 1.0 + kSlack) throw DomainError("ea_efficiency: result exceeds 1");
  return std::min(value, 1.0);
}

BogoliubovCoefficients output_coefficients(const CouplerPoint& point,
                                           const SqueezerSetting& setting) {
  point.validate();
  const double g = setting.g_in;
  const double gp = setting.g_out;
  require_gain(g, "output_coefficients (G)");
  require_gain(gp, "output_coefficients (G')");
  if (std::isinf(g) || std::isinf(gp)) {
    throw DomainError("output_coefficients: gains must be finite");
  }
  const double kappa = point.kappa;
  const std::complex<double> i{0.0, 1.0};
  BogoliubovCoefficients c;
  c.c_signal = std::exp(i * (point.theta_s - point.theta_p)) * std::sqrt(point.eta * gp);
  c.c_probe_vac = std::sqrt(g * kappa * gp) - std::sqrt((gp - 1.0) * (g - 1.0));
  c.c_env = std::exp(-i * point.theta_p) * std::sqrt(point.kappa_e() * gp);
  c.c_ancilla_conj = std::sqrt((g - 1.0) * kappa * gp) - std::sqrt((gp - 1.0) * g);
  return c;
}

double ancilla_output_signal_gain(const CouplerPoint& point, double g_in) {
  const double eta_ea = ea_efficiency(point, g_in);
  const double inv_g = std::isinf(g_in) ? 0.0 : 1.0 / g_in;
  return eta_ea * point.kappa * (1.0 - inv_g);
}

double lossy_noise(const CouplerPoint& point, const SqueezerSetting& setting,
                   const AncillaLoss& loss) {
  point.validate();
  loss.validate();
  const double g = setting.g_in;
  const double gp = setting.g_out;
  require_gain(g, "lossy_noise (G)");
  require_gain(gp, "lossy_noise (G')");
  const double ka = loss.kappa_a;
  const double mismatch = std::sqrt((g - 1.0) * gp * point.kappa) - std::sqrt((gp - 1.0) * g * ka);
  return mismatch * mismatch + (gp - 1.0) * (1.0 - ka);
}

double lossy_optimal_gain(double kappa, double g_in, const AncillaLoss& loss) {
  require_unit(kappa, "lossy_optimal_gain: kappa");
  require_gain(g_in, "lossy_optimal_gain");
  loss.validate();
  if (std::isinf(g_in)) throw DomainError("lossy_optimal_gain: G must be finite");
  if (loss.kappa_a == 1.0) return optimal_antisqueeze_gain(kappa, g_in);
  const double gm = g_in - 1.0;
  const double ka = loss.kappa_a;
  const double numer = gm * ka +
                       std::sqrt(gm * gm * ka * ka - 2.0 * gm * ka * (g_in * kappa + kappa - 1.0) +
                                 (gm * kappa + 1.0) * (gm * kappa + 1.0)) +
                       gm * kappa + 1.0;
  const double radicand = 2.0 * kappa * (-g_in * g_in * ka + ka + g_in - 1.0) +
                          (gm * ka + 1.0) * (gm * ka + 1.0) + gm * gm * kappa * kappa;
  if (!(radicand > 0.0)) throw DomainError("lossy_optimal_gain: degenerate parameters");
  return std::max(1.0, numer / (2.0 * std::sqrt(radicand)));
}

}  // namespace transduce
