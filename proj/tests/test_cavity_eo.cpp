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
#include "transduce/cavity_eo.hpp"
#include "transduce/errors.hpp"

using namespace transduce;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

EoCavityParams fig3(double c, double zeta = 0.99) {
  EoCavityParams p;
  p.gamma_p = 25.8;
  p.gamma_s = 13.706;
  p.zeta_p = zeta;
  p.zeta_s = zeta;
  p.set_cooperativity(c);
  return p;
}

EoCavityParams random_params(std::mt19937_64& rng, bool detuned) {
  EoCavityParams p;
  p.gamma_p = std::exp(uniform(rng, -1, 4));
  p.gamma_s = std::exp(uniform(rng, -1, 4));
  p.zeta_p = uniform(rng, 0, 1);
  p.zeta_s = uniform(rng, 0, 1);
  p.set_cooperativity(std::exp(uniform(rng, -7, 4)));
  if (detuned) p.detuning_error = uniform(rng, -50, 50);
  return p;
}

}  // namespace

TEST_CASE("probe transmissivity amplitude limits") {
  EoCavityParams p;
  p.gamma_p = 2;
  p.gamma_s = 3;
  p.set_cooperativity(0.4);
  CHECK(std::abs(probe_transmissivity_amplitude(1e9, p) + 1.0) < 1e-8);
  p.set_cooperativity(0.0);
  CHECK(std::abs(probe_transmissivity_amplitude(0.0, p) - 1.0) < 1e-15);
  p.set_cooperativity(1.0);
  CHECK(std::abs(probe_transmissivity_amplitude(0.0, p)) < 1e-15);
  p.detuning_error = 1.0;
  CHECK_THROWS_AS(probe_transmissivity_amplitude(0.0, p), DomainError);
}

TEST_CASE("conversion amplitude") {
  EoCavityParams p;
  p.gamma_p = 2;
  p.gamma_s = 3;
  CHECK(std::abs(conversion_amplitude(0.7, p)) == 0.0);
  p.set_cooperativity(1.0);
  CHECK(std::norm(conversion_amplitude(0.0, p)) == doctest::Approx(1.0).epsilon(1e-14));
  p.zeta_p = p.zeta_s = 0.99;
  p.set_cooperativity(0.1);
  CHECK(std::norm(conversion_amplitude(0.0, p)) ==
        doctest::Approx(4 * 0.1 * 0.9801 / 1.21).epsilon(1e-14));
}

TEST_CASE("overcoupled cavities are lossless") {
  auto p = fig3(0.3, 1.0);
  for (double w = -300; w <= 300; w += 0.7) CHECK(coupler_point(w, p).kappa_e() <= 1e-12);
  p.set_cooperativity(1.0);
  const auto c = coupler_point(0.0, p);
  CHECK(c.eta == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c.kappa < 1e-28);
}

TEST_CASE("detuned model reproduces resonant forms at zero detuning") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    const auto p = random_params(rng, false);
    const double w = uniform(rng, -5, 5) * p.gamma_s;
    const auto closed = coupler_point(w, p);
    const auto full = detuned_coupler_point(w, p);
    CHECK(std::abs(closed.eta - full.eta) < 1e-10);
    CHECK(std::abs(closed.kappa - full.kappa) < 1e-10);
    const auto s = detuned_transfer_matrix(w + p.omega_s, p);
    CHECK(std::abs(s(1, 2) - probe_transmissivity_amplitude(w, p)) < 1e-10);
    // Reciprocity of the beamsplitter-type coupler.
    CHECK(std::abs(std::abs(s(0, 2)) - std::abs(s(1, 0))) < 1e-10);
  }
}

TEST_CASE("detuned transfer matrix with zero coupling") {
  auto p = fig3(0.0, 0.8);
  p.detuning_error = 5;
  for (double w = -40; w <= 40; w += 3.3) {
    const auto s = detuned_transfer_matrix(w + p.omega_s, p);
    CHECK(std::abs(s(1, 0)) == 0.0);
    CHECK(std::abs(s(0, 2)) == 0.0);
    const Complex expect = -1.0 + p.zeta_s * p.gamma_s / (p.gamma_s / 2 - Complex(0, 1) * w);
    CHECK(std::abs(s(0, 0) - expect) < 1e-12);
  }
}

TEST_CASE("detuned transfer matrix preserves commutators") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 100; ++k) {
    const auto p = random_params(rng, true);
    const double w = p.omega_s + uniform(rng, -5, 5) * p.gamma_p;
    const auto s = detuned_transfer_matrix(w, p);
    for (std::size_t r = 0; r < 4; ++r) {
      double sum = 0;
      for (std::size_t c = 0; c < 8; ++c) sum += (c < 4 ? 1.0 : -1.0) * std::norm(s(r, c));
      CHECK(std::abs(sum - (r < 2 ? 1.0 : -1.0)) < 1e-10);
    }
  }
}

TEST_CASE("passivity of the coupler spectra") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 10000; ++k) {
    const bool detuned = k % 2 == 1;
    const auto p = random_params(rng, detuned);
    const double w = uniform(rng, -10, 10) * std::max(p.gamma_p, p.gamma_s);
    const auto c = coupler_point(w, p);
    const double ke = 1.0 - c.eta - c.kappa;
    CHECK(c.eta >= 0.0);
    CHECK(c.kappa >= 0.0);
    CHECK(ke >= -1e-10);
    CHECK(c.eta + c.kappa <= 1.0 + 1e-10);
  }
}

TEST_CASE("EA efficiency spectrum") {
  const auto p = fig3(0.1);
  const auto grid = default_grid(p);
  CHECK(grid.size() == 2001);
  CHECK(grid.front() == doctest::Approx(-258.0));
  CHECK(grid.back() == doctest::Approx(258.0));
  const auto eta = efficiency_spectrum(p, grid);
  const auto g1 = ea_efficiency_spectrum(p, 1.0, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(g1.values[i] == doctest::Approx(eta.values[i]).epsilon(1e-14));
  }
  const double peak = ea_efficiency_spectrum(p, kInf, std::vector<double>{0.0}).values[0];
  CHECK(peak == doctest::Approx(0.99 / (1 + 0.01 / 0.1)).epsilon(1e-14));
  const auto big = ea_efficiency_spectrum(p, 1e12, grid);
  const auto inf = ea_efficiency_spectrum(p, kInf, grid);
  for (std::size_t i = 0; i < grid.size(); i += 50) {
    CHECK(big.values[i] == doctest::Approx(inf.values[i]).epsilon(1e-9));
  }
}

TEST_CASE("half power bandwidth") {
  Spectrum lorentz;
  const double gamma = 3.0;
  for (int i = -4000; i <= 4000; ++i) {
    const double w = i * 0.005;
    lorentz.omegas.push_back(w);
    lorentz.values.push_back(1.0 / (1.0 + 4 * w * w / (gamma * gamma)));
  }
  CHECK(std::abs(half_power_bandwidth(lorentz) - gamma) < 0.005);

  Spectrum twin = lorentz;
  for (std::size_t i = 0; i < twin.omegas.size(); ++i) {
    const double w = twin.omegas[i];
    twin.values[i] = 1.0 / (1.0 + 4 * (w - 8) * (w - 8)) + 1.0 / (1.0 + 4 * (w + 8) * (w + 8));
  }
  CHECK_THROWS_AS(half_power_bandwidth(twin), NotUnimodal);

  // Weak coupling: set by the product of the two cavity Lorentzians,
  // of order the narrower linewidth.
  const auto weak = fig3(1e-4, 1.0);
  const double b = half_power_bandwidth(efficiency_spectrum(weak, default_grid(weak, 20001)));
  const double narrow = std::min(weak.gamma_p, weak.gamma_s);
  CHECK(b < narrow);
  CHECK(b > 0.8 * narrow);

  // Infinite squeezing: exact Lorentzian of width sqrt(1 + C / (1 - zeta_P)) Gamma_S.
  const auto p = fig3(0.1);
  const double expect = std::sqrt(1 + 0.1 / 0.01) * p.gamma_s;
  std::vector<double> grid(40001);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = -10 * expect + 20 * expect * i / 40000.0;
  const double got = half_power_bandwidth(ea_efficiency_spectrum(p, kInf, grid));
  CHECK(got == doctest::Approx(expect).epsilon(0.02));
}

TEST_CASE("detuning robustness at the reference device parameters") {
  auto p = fig3(0.1);
  const double g = 1000.0;
  double prev_loss = 2.0;
  double peak0 = 0.0;
  double peak40 = 0.0;
  for (double delta : {0.0, 10.0, 20.0, 30.0, 40.0}) {
    p.detuning_error = delta;
    const double w = conversion_peak_frequency(p);
    const double loss = coupler_point(w, p).kappa_e();
    CHECK(loss < prev_loss);
    prev_loss = loss;
    const auto s = ea_efficiency_spectrum(p, g, default_grid(p, 4001));
    const double peak = *std::max_element(s.values.begin(), s.values.end());
    if (delta == 0.0) peak0 = peak;
    if (delta == 40.0) peak40 = peak;
  }
  CHECK(peak40 >= 0.5 * peak0);
}

TEST_CASE("parameter validation") {
  EoCavityParams p;
  p.gamma_p = -1;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.gamma_p = 1;
  p.zeta_s = 1.5;
  CHECK_THROWS_AS(p.validate(), DomainError);
}
