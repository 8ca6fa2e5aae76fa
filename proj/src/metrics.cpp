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

#include "transduce/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "transduce/errors.hpp"
#include "transduce/protocol.hpp"

namespace transduce {
namespace {

constexpr double kPi = std::numbers::pi;

void require_zeta(double zeta_p, double zeta_s) {
  if (!(zeta_p >= 0.0 && zeta_p <= 1.0) || !(zeta_s >= 0.0 && zeta_s <= 1.0)) {
    throw DomainError("coupling ratios must lie in [0, 1]");
  }
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) sum += 0.5 * (y[i] + y[i + 1]) * (x[i + 1] - x[i]);
  return sum;
}

// Boundary between a point where rate > 0 (inside) and one where it is not.
double bisect_edge(const RealFunction& rate, double inside, double outside) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (inside + outside);
    if (mid == inside || mid == outside) break;
    (rate(mid) > 0.0 ? inside : outside) = mid;
  }
  return inside;
}

double extend(const RealFunction& rate, double start, double direction, double step) {
  double inside = start;
  for (int k = 0; k < 60; ++k) {
    const double probe = start + direction * step * std::ldexp(1.0, k);
    if (!(rate(probe) > 0.0)) return bisect_edge(rate, inside, probe);
    inside = probe;
  }
  throw Diverges("broadband_rate: support does not end");
}

}  // namespace

const char* ebp_method_name(EbpMethod method) {
  switch (method) {
    case EbpMethod::closed_form:
      return "closed-form";
    case EbpMethod::residue:
      return "residue";
    case EbpMethod::quadrature:
      return "quadrature";
  }
  return "unknown";
}

double ebp_eo_closed(const EoCavityParams& p) {
  p.validate();
  if (p.detuning_error != 0.0) throw DomainError("ebp_eo_closed: requires detuning_error = 0");
  const double c = p.cooperativity();
  return 2.0 * kPi * c * p.gamma_p * p.gamma_s * p.zeta_p * p.zeta_s /
         ((c + 1.0) * (p.gamma_p + p.gamma_s));
}

double ebp_eo_max(double g_alpha, double zeta_p, double zeta_s) {
  require_zeta(zeta_p, zeta_s);
  if (!(g_alpha >= 0.0)) throw DomainError("ebp_eo_max: g_alpha must be >= 0");
  return kPi * zeta_s * zeta_p * g_alpha;
}

EbpResult ebp_quadrature(const EoCavityParams& p, double g_in) {
  p.validate();
  if (!(g_in >= 1.0)) throw DomainError("ebp_quadrature: G must be >= 1");
  if (p.g_alpha == 0.0) return {0.0, EbpMethod::quadrature};
  const double spread = std::isinf(g_in) ? std::sqrt(1.0 + p.cooperativity()) : std::pow(g_in, 0.25);
  const double scale = std::max({p.gamma_p, p.gamma_s, 2.0 * p.g_alpha * spread});
  const double shift = p.detuning_error == 0.0 ? 0.0 : conversion_peak_frequency(p);
  const auto f = [&](double w) { return ea_efficiency(coupler_point(w + shift, p), g_in); };
  return {integrate_infinite(f, scale).value, EbpMethod::quadrature};
}

double ebp_ea_closed_unit_zeta(const EoCavityParams& p, double g_in) {
  p.validate();
  if (p.zeta_p != 1.0 || p.zeta_s != 1.0 || p.detuning_error != 0.0) {
    throw DomainError("ebp_ea_closed_unit_zeta: requires zeta = 1 and no detuning");
  }
  if (!(g_in >= 1.0) || std::isinf(g_in)) throw DomainError("ebp_ea_closed_unit_zeta: G must be finite and >= 1");
  if (p.g_alpha == 0.0) return 0.0;
  const double tp = p.gamma_p / p.g_alpha;
  const double ts = p.gamma_s / p.g_alpha;
  const double prod = tp * ts;
  const double r = prod * (prod + 16.0 * g_in - 8.0) + 16.0;
  const double root = std::sqrt(r);
  return 8.0 * kPi * prod * g_in * p.g_alpha / std::sqrt(r * (tp * tp + ts * ts + 2.0 * root - 8.0));
}

double ebp_ea_infinite(const EoCavityParams& p) {
  p.validate();
  if (p.detuning_error != 0.0) throw DomainError("ebp_ea_infinite: requires detuning_error = 0");
  if (p.zeta_p == 1.0 && p.g_alpha > 0.0) throw Diverges("ebp_ea_infinite: diverges at zeta_P = 1");
  const double c = p.cooperativity();
  return kPi * c * p.gamma_s * p.zeta_s / (2.0 * std::sqrt((1.0 + c - p.zeta_p) * (1.0 - p.zeta_p)));
}

EbpResult ebp_ea(const EoCavityParams& p, double g_in) {
  p.validate();
  if (!(g_in >= 1.0)) throw DomainError("ebp_ea: G must be >= 1");
  if (p.detuning_error == 0.0) {
    if (std::isinf(g_in)) return {ebp_ea_infinite(p), EbpMethod::closed_form};
    if (p.zeta_p == 1.0 && p.zeta_s == 1.0) {
      return {ebp_ea_closed_unit_zeta(p, g_in), EbpMethod::closed_form};
    }
  }
  return ebp_quadrature(p, g_in);
}

double thermal_entropy(double x) {
  if (!(x >= 0.0)) throw DomainError("thermal_entropy: argument must be >= 0");
  if (x == 0.0) return 0.0;
  return (x + 1.0) * std::log2(x + 1.0) - x * std::log2(x);
}

double q1_pointwise(double eta, double sentinel) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("q1_pointwise: eta must lie in [0, 1]");
  if (eta == 1.0) return sentinel;
  return std::max(std::log2(eta / (1.0 - eta)), 0.0);
}

double q_lb_pointwise(double eta_ea, double n_b, double sentinel) {
  if (!(eta_ea >= 0.0) || !std::isfinite(eta_ea)) throw DomainError("q_lb_pointwise: eta must be >= 0");
  if (!(n_b >= 0.0) || !std::isfinite(n_b)) throw DomainError("q_lb_pointwise: n_b must be >= 0");
  if (eta_ea == 1.0) return sentinel;
  const double gap = std::abs(1.0 - eta_ea);
  if (eta_ea == 0.0) return 0.0;
  return std::max(0.0, std::log2(eta_ea / gap) - thermal_entropy(n_b / gap));
}

double broadband_rate(const RealFunction& rate, std::span<const double> scan) {
  if (scan.size() < 2) throw DomainError("broadband_rate: scan needs at least two points");
  std::vector<char> positive(scan.size());
  for (std::size_t i = 0; i < scan.size(); ++i) positive[i] = rate(scan[i]) > 0.0;
  const double step = scan.back() - scan.front();
  double total = 0.0;
  std::size_t i = 0;
  while (i < scan.size()) {
    if (!positive[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < scan.size() && positive[j + 1]) ++j;
    const double lo = i == 0 ? extend(rate, scan.front(), -1.0, step)
                             : bisect_edge(rate, scan[i], scan[i - 1]);
    const double hi = j + 1 == scan.size() ? extend(rate, scan.back(), 1.0, step)
                                           : bisect_edge(rate, scan[j], scan[j + 1]);
    if (hi > lo) total += integrate_interval(rate, lo, hi).value;
    i = j + 1;
  }
  return total / (2.0 * kPi);
}

double q1_broadband(const Spectrum& eta) {
  eta.validate();
  std::vector<double> q(eta.values.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = q1_pointwise(eta.values[i]);
  return trapezoid(eta.omegas, q) / (2.0 * kPi);
}

double q_lb_broadband(const Spectrum& eta_ea, const Spectrum& n_b) {
  if (eta_ea.omegas != n_b.omegas) throw GridMismatch("q_lb_broadband: spectra on different grids");
  eta_ea.validate();
  n_b.validate();
  std::vector<double> q(eta_ea.values.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = q_lb_pointwise(eta_ea.values[i], n_b.values[i]);
  return trapezoid(eta_ea.omegas, q) / (2.0 * kPi);
}

double q1_broadband(const RealFunction& eta, std::span<const double> scan) {
  return broadband_rate([&](double w) { return q1_pointwise(eta(w)); }, scan);
}

double c_threshold(double zeta_p, double zeta_s) {
  require_zeta(zeta_p, zeta_s);
  const double z = zeta_p * zeta_s;
  if (2.0 * z < 1.0) throw NoThreshold("c_threshold: 2 zeta_S zeta_P < 1, efficiency never reaches 1/2");
  return -1.0 + 4.0 * z - std::sqrt(8.0 * z * (2.0 * z - 1.0));
}

double c_threshold_ea(double zeta_p, double zeta_s, double g_in) {
  require_zeta(zeta_p, zeta_s);
  if (!(g_in >= 1.0)) throw DomainError("c_threshold_ea: G must be >= 1");
  if (std::isinf(g_in)) {
    if (!(2.0 * zeta_s > 1.0)) throw NoThreshold("c_threshold_ea: zeta_S <= 1/2");
    return (1.0 - zeta_p) / (2.0 * zeta_s - 1.0);
  }
  const double b = 1.0 - 2.0 * zeta_s;
  const double radicand =
      zeta_p * g_in * (zeta_p * (4.0 * zeta_s + b * b * g_in - 1.0) - 2.0 * zeta_s);
  if (radicand < 0.0) throw NoThreshold("c_threshold_ea: no cooperativity reaches 1/2");
  const double a = -1.0 + zeta_p * ((4.0 * zeta_s - 2.0) * g_in + 2.0);
  const double root = 2.0 * std::sqrt(radicand);
  // Root product form avoids cancellation between a and root at large G.
  const double product = (1.0 - 2.0 * zeta_p) * (1.0 - 2.0 * zeta_p) +
                         4.0 * g_in * zeta_p * (1.0 - zeta_p);
  const double c = a > 0.0 ? product / (a + root) : a - root;
  if (!(c > 0.0)) throw NoThreshold("c_threshold_ea: no positive cooperativity reaches 1/2");
  return c;
}

}  // namespace transduce
