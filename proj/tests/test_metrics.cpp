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
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "transduce/errors.hpp"
#include "transduce/metrics.hpp"
#include "transduce/protocol.hpp"

using namespace transduce;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

EoCavityParams cavity(double gp, double gs, double zeta, double g_alpha) {
  EoCavityParams p;
  p.gamma_p = gp;
  p.gamma_s = gs;
  p.zeta_p = zeta;
  p.zeta_s = zeta;
  p.g_alpha = g_alpha;
  return p;
}

EoCavityParams fig3(double c, double zeta) {
  auto p = cavity(25.8, 13.706, zeta, 0.0);
  p.set_cooperativity(c);
  return p;
}

// The EA spectrum is 4 C zp zs G / Q(w^2) with Q quadratic; fit Q from three
// direct evaluations and integrate in closed form.
double ea_ebp_oracle(const EoCavityParams& p, double g) {
  const Complex i{0.0, 1.0};
  const double c = p.cooperativity();
  const auto q = [&](double u) {
    const double w = std::sqrt(u);
    const Complex b = 1.0 - 2.0 * i * w / p.gamma_s;
    const Complex d = (1.0 - 2.0 * i * w / p.gamma_p) * b + c;
    const Complex n = -d + 2.0 * p.zeta_p * b;
    return g * std::norm(d) - (g - 1.0) * std::norm(n);
  };
  const double s = p.gamma_p * p.gamma_s;
  const double q0 = q(0.0);
  const double q1 = q(s);
  const double q2 = q(2.0 * s);
  const double cc = (q2 - 2.0 * q1 + q0) / (2.0 * s * s);
  const double bb = (q1 - q0) / s - cc * s;
  const double num = 4.0 * c * p.zeta_p * p.zeta_s * g;
  return num * (16.0 / cc) * quartic_lorentzian_integral(16.0 * q0 / cc, 4.0 * bb / cc);
}

}  // namespace

TEST_CASE("non-EA EBP closed form") {
  const auto p = cavity(2, 2, 1, 1);
  CHECK(ebp_eo_closed(p) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(ebp_eo_closed(cavity(3, 4, 0.9, 0)) == 0.0);
  for (double c : {0.01, 0.1, 1.0, 10.0}) {
    const auto q = fig3(c, 0.99);
    CHECK(ebp_quadrature(q, 1.0).value == doctest::Approx(ebp_eo_closed(q)).epsilon(1e-6));
  }
  CHECK(ebp_quadrature(cavity(2, 2, 1, 1), 1.0).value == doctest::Approx(kPi).epsilon(1e-6));
}

TEST_CASE("non-EA EBP maximum over linewidths") {
  CHECK(ebp_eo_max(1.0, 1.0, 1.0) == doctest::Approx(kPi));
  CHECK(ebp_eo_max(0.0, 0.5, 0.5) == 0.0);
  const Box box{{0.1, 0.1}, {10, 10}};
  std::vector<double> x0{1.0, 5.0};
  const auto r = nelder_mead(
      [](std::span<const double> x) { return -ebp_eo_closed(cavity(x[0], x[1], 1, 1)); }, x0, box, 1);
  CHECK(std::abs(r.best_x[0] - 2.0) < 1e-4);
  CHECK(std::abs(r.best_x[1] - 2.0) < 1e-4);
  CHECK(-r.best_value == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("EA EBP at unit coupling ratios") {
  for (double g : {1.0, 10.0, 100.0, 1000.0}) {
    const auto p = cavity(2, 2, 1, 1);
    const auto r = ebp_ea(p, g);
    CHECK(r.method == EbpMethod::closed_form);
    CHECK(r.value == doctest::Approx(std::pow(g, 0.25) * kPi).epsilon(1e-12));
    CHECK(ebp_quadrature(p, g).value == doctest::Approx(r.value).epsilon(1e-6));
  }
  for (double g : {1000.0, 1e4}) {
    const double w = 2.0 * std::sqrt(g);
    const double ratio = ebp_ea(cavity(w, w, 1, 1), g).value / (kPi * std::sqrt(g));
    CHECK(std::abs(ratio - 0.703) <= 0.001);
  }
  for (double g : {1.0, 2.0, 3.0}) {
    const auto p = fig3(1e-3, 1.0);
    CHECK(ebp_ea(p, g).value / ebp_eo_closed(p) == doctest::Approx(g).epsilon(0.01));
  }
}

TEST_CASE("EA EBP against the quartic Lorentzian oracle") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 60; ++k) {
    auto p = cavity(std::exp(uniform(rng, -1, 4)), std::exp(uniform(rng, -1, 4)), 1, 0);
    p.zeta_p = uniform(rng, 0.05, 1);
    p.zeta_s = uniform(rng, 0.05, 1);
    p.set_cooperativity(std::exp(uniform(rng, -5, 3)));
    const double g = std::exp(uniform(rng, 0, 7));
    const double oracle = ea_ebp_oracle(p, g);
    CHECK(ebp_quadrature(p, g).value == doctest::Approx(oracle).epsilon(1e-6));
    if (k % 3 == 0) {
      p.zeta_p = p.zeta_s = 1.0;
      CHECK(ebp_ea_closed_unit_zeta(p, g) == doctest::Approx(ea_ebp_oracle(p, g)).epsilon(1e-9));
    }
  }
}

TEST_CASE("infinite squeezing EBP") {
  const auto p = fig3(0.1, 0.99);
  CHECK(ebp_ea(p, kInf).value == doctest::Approx(ebp_quadrature(p, kInf).value).epsilon(1e-6));
  CHECK_THROWS_AS(ebp_ea(fig3(0.1, 1.0), kInf), Diverges);
}

TEST_CASE("EA EBP nondecreasing in G") {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 200; ++k) {
    auto p = cavity(std::exp(uniform(rng, -1, 4)), std::exp(uniform(rng, -1, 4)), 1, 0);
    p.set_cooperativity(std::exp(uniform(rng, -6, 4)));
    double prev = 0.0;
    for (double g = 1.0; g < 1e6; g *= 3.0) {
      const double v = ebp_ea(p, g).value;
      CHECK(v >= prev * (1 - 1e-12));
      prev = v;
    }
  }
}

TEST_CASE("pointwise capacities") {
  CHECK(q1_pointwise(0.5) == 0.0);
  CHECK(q1_pointwise(0.8) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(q1_pointwise(0.25) == 0.0);
  CHECK(q1_pointwise(1.0) == kDefaultCapacitySentinel);
  CHECK_THROWS_AS(q1_pointwise(1.2), DomainError);

  CHECK(thermal_entropy(0.0) == 0.0);
  CHECK(thermal_entropy(1.0) == doctest::Approx(2.0));
  CHECK(q_lb_pointwise(0.9, 0.1) == doctest::Approx(std::log2(9.0) - 2.0).epsilon(1e-14));
  CHECK(q_lb_pointwise(0.4, 0.0) == 0.0);
  CHECK(q_lb_pointwise(0.5, 0.3) == 0.0);

  std::mt19937_64 rng(12);
  for (int k = 0; k < 2000; ++k) {
    const double eta = uniform(rng, 0, 1);
    const double nb = k % 4 == 0 ? 0.0 : std::exp(uniform(rng, -10, 2));
    const double a = q_lb_pointwise(eta, nb);
    const double b = q1_pointwise(eta);
    CHECK(a <= b);
    if (nb == 0.0) CHECK(a == b);
    if (nb > 0.0 && b > 0.0) CHECK(a < b);
  }
}

TEST_CASE("broadband capacities") {
  std::vector<double> scan;
  for (int i = -50; i <= 50; ++i) scan.push_back(i * 0.1);
  const double width = 3.0;
  const auto rect = [&](double w) { return std::abs(w) < width / 2 ? 0.8 : 0.1; };
  CHECK(q1_broadband(rect, scan) == doctest::Approx(width * 2.0 / (2 * kPi)).epsilon(1e-9));
  CHECK(q1_broadband([](double) { return 0.4; }, scan) == 0.0);

  Spectrum s;
  s.omegas = scan;
  s.values.assign(scan.size(), 0.3);
  CHECK(q1_broadband(s) == 0.0);
  Spectrum nb = s;
  std::fill(nb.values.begin(), nb.values.end(), 0.0);
  s.values.assign(scan.size(), 0.8);
  CHECK(q_lb_broadband(s, nb) == doctest::Approx(q1_broadband(s)));
  nb.omegas.pop_back();
  nb.values.pop_back();
  CHECK_THROWS_AS(q_lb_broadband(s, nb), GridMismatch);
}

TEST_CASE("cooperativity thresholds") {
  CHECK(std::abs(c_threshold(1, 1) - (3 - 2 * std::sqrt(2.0))) <= 1e-12);
  CHECK_THROWS_AS(c_threshold(0.7, 0.7), NoThreshold);
  const double c99 = c_threshold(0.99, 0.99);
  auto p = fig3(c99, 0.99);
  CHECK(coupler_point(0.0, p).eta == doctest::Approx(0.5).epsilon(1e-12));

  for (double g : {1.0, 2.0, 10.0, 1000.0, 1e6}) {
    const double expect = 1.0 / std::pow(std::sqrt(g) + std::sqrt(1 + g), 2);
    CHECK(std::abs(c_threshold_ea(1, 1, g) - expect) <= 1e-12);
  }
  CHECK(c_threshold_ea(0.9, 0.8, 1.0) == doctest::Approx(c_threshold(0.9, 0.8)).epsilon(1e-12));
  CHECK(c_threshold_ea(1, 1, 1e6) * 4e6 == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(c_threshold_ea(0.97, 0.9, 1e9) == doctest::Approx(0.03 / 0.8).epsilon(1e-6));
  CHECK(c_threshold_ea(0.97, 0.9, kInf) == doctest::Approx(0.03 / 0.8).epsilon(1e-14));
}

TEST_CASE("EA threshold puts the peak efficiency at one half") {
  std::mt19937_64 rng(15);
  int checked = 0;
  while (checked < 100) {
    const double zp = uniform(rng, 0.5, 1);
    const double zs = uniform(rng, 0.5, 1);
    const double g = std::exp(uniform(rng, 0, 7));
    double c = 0.0;
    try {
      c = c_threshold_ea(zp, zs, g);
    } catch (const NoThreshold&) {
      continue;
    }
    auto p = cavity(20, 10, 1, 0);
    p.zeta_p = zp;
    p.zeta_s = zs;
    p.set_cooperativity(c);
    CHECK(std::abs(ea_efficiency(coupler_point(0.0, p), g) - 0.5) <= 1e-8);
    ++checked;
  }
}

TEST_CASE("broadband Q1 switches on at the threshold") {
  const double cth = c_threshold(0.99, 0.99);
  for (double c : {0.5 * cth, 0.99 * cth, 1.01 * cth, 2 * cth, 10.0}) {
    const auto p = fig3(c, 0.99);
    const auto grid = default_grid(p, 401);
    const double q = q1_broadband([&](double w) { return coupler_point(w, p).eta; }, grid);
    CHECK((q > 0.0) == (c > cth));
  }
}

TEST_CASE("EA rate survives a lossy ancilla") {
  const double g = gain_from_db(10);
  const AncillaLoss loss{0.9};
  bool beaten = false;
  for (double lg = -3; lg <= 0; lg += 0.01) {
    const double eta = std::pow(10.0, lg);
    if (eta > 0.99) break;
    const auto point = CouplerPoint::from_loss(eta, 0.01);
    const double gp = lossy_optimal_gain(point.kappa, g, loss);
    const double rate = q_lb_pointwise(eta * gp, lossy_noise(point, {g, gp}, loss));
    if (rate > q1_pointwise(eta)) beaten = true;
  }
  CHECK(beaten);
}
