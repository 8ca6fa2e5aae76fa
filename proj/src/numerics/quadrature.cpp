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

#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "transduce/errors.hpp"
#include "transduce/numerics.hpp"

namespace transduce {
namespace {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod(const F& f, double a, double b, std::size_t& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  evaluations += 15;
  const double value = kronrod * half;
  const double error = std::abs((kronrod - gauss) * half);
  if (!std::isfinite(value)) {
    throw NonConvergent("quadrature: integrand is not finite on the domain");
  }
  return {a, b, value, error};
}

template <class F>
QuadratureResult adaptive(const F& f, double a, double b, double abs_floor,
                          const QuadratureOptions& options) {
  QuadratureResult result;
  std::priority_queue<Panel> panels;
  const std::size_t initial = std::max<std::size_t>(1, options.initial_panels);
  const double width = (b - a) / static_cast<double>(initial);
  double total = 0.0;
  double total_error = 0.0;
  for (std::size_t i = 0; i < initial; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = (i + 1 == initial) ? b : lo + width;
    Panel p = gauss_kronrod(f, lo, hi, result.evaluations);
    total += p.value;
    total_error += p.error;
    panels.push(p);
  }
  while (total_error > std::max(abs_floor, options.rel_tol * std::abs(total))) {
    if (panels.size() >= options.max_panels) {
      throw NonConvergent("quadrature: panel budget exhausted before tolerance was met");
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw NonConvergent("quadrature: panel width reached machine resolution");
    }
    const Panel left = gauss_kronrod(f, worst.a, mid, result.evaluations);
    const Panel right = gauss_kronrod(f, mid, worst.b, result.evaluations);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  // Re-sum from the panels to shed the drift of the running updates.
  total = 0.0;
  total_error = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    total_error += panels.top().error;
    panels.pop();
  }
  result.value = total;
  result.abs_error_estimate = total_error;
  return result;
}

}  // namespace

QuadratureResult integrate_infinite(const RealFunction& f, double scale_hint,
                                    const QuadratureOptions& options) {
  if (!(scale_hint > 0.0) || !std::isfinite(scale_hint)) {
    throw DomainError("integrate_infinite: scale_hint must be positive and finite");
  }
  const auto mapped = [&](double x) {
    const double c = std::cos(x);
    const double value = f(scale_hint * std::tan(x));
    if (value == 0.0) return 0.0;
    return value * scale_hint / (c * c);
  };
  constexpr double half_pi = 0.5 * std::numbers::pi;
  return adaptive(mapped, -half_pi, half_pi, options.abs_tol_per_scale * scale_hint,
                  options);
}

QuadratureResult integrate_interval(const RealFunction& f, double a, double b,
                                    const QuadratureOptions& options) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_interval: bounds must be finite");
  }
  if (a == b) return {};
  if (b < a) {
    QuadratureResult r = integrate_interval(f, b, a, options);
    r.value = -r.value;
    return r;
  }
  return adaptive(f, a, b, options.abs_tol_per_scale * (b - a), options);
}

double quartic_lorentzian_integral(double c1, double c2) {
  if (!(c1 > 0.0) || !std::isfinite(c1)) {
    throw DomainError("quartic_lorentzian_integral: c1 must be positive");
  }
  const double root_c1 = std::sqrt(c1);
  const double inner = c2 + 2.0 * root_c1;
  if (!(inner > 0.0) || !std::isfinite(inner)) {
    throw DomainError("quartic_lorentzian_integral: c2 + 2 sqrt(c1) must be positive");
  }
  return std::numbers::pi / (2.0 * root_c1 * std::sqrt(inner));
}

}  // namespace transduce
