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
#include <random>

#include "doctest.h"
#include "transduce/errors.hpp"
#include "transduce/protocol.hpp"

using namespace transduce;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

CouplerPoint random_point(std::mt19937_64& rng) {
  const double eta = uniform(rng, 0.0, 1.0);
  const double kappa = uniform(rng, 0.0, 1.0 - eta);
  return CouplerPoint::make(eta, kappa, uniform(rng, -3.14, 3.14), uniform(rng, -3.14, 3.14));
}

}  // namespace

TEST_CASE("coupler point validation") {
  CHECK_THROWS_AS(CouplerPoint::make(0.6, 0.6), DomainError);
  CHECK_THROWS_AS(CouplerPoint::make(-0.1, 0.6), DomainError);
  CHECK_NOTHROW(CouplerPoint::make(0.5, 0.5 + 1e-13));
  CHECK(CouplerPoint::make(0.5, 0.5 + 1e-13).kappa_e() == 0.0);
  CHECK(CouplerPoint::from_loss(0.2, 0.1).kappa == doctest::Approx(0.7));
}

TEST_CASE("gain conversions") {
  CHECK(gain_from_db(10) == doctest::Approx(10));
  CHECK(gain_from_db(30) == doctest::Approx(1000));
  CHECK(std::isinf(gain_from_db(kInf)));
  CHECK(gain_to_db(100) == doctest::Approx(20));
}

TEST_CASE("optimal_antisqueeze_gain") {
  CHECK(optimal_antisqueeze_gain(0.3, 1.0) == doctest::Approx(1.0));
  CHECK(optimal_antisqueeze_gain(1.0, 7.0) == doctest::Approx(7.0));
  CHECK(optimal_antisqueeze_gain(0.99, 10.0) == doctest::Approx(1.0 / (0.01 + 0.099)).epsilon(1e-14));
  const auto p = CouplerPoint::make(0.005, 0.99);
  const auto o = covariance_oracle(p, {10.0, optimal_antisqueeze_gain(0.99, 10.0)}, {});
  CHECK(std::abs(o.n_b) < 1e-12);
  CHECK_THROWS_AS(optimal_antisqueeze_gain(0.5, 0.5), DomainError);
}

TEST_CASE("ea_efficiency closed forms") {
  const auto p = CouplerPoint::make(0.3, 0.5);
  CHECK(ea_efficiency(p, 1.0) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(ea_efficiency(CouplerPoint::from_loss(0.2, 0.0), kInf) == 1.0);
  CHECK(std::abs(ea_efficiency(CouplerPoint::from_loss(0.01, 0.01), kInf) - 0.5) <= 1e-12);
  CHECK_THROWS_AS(ea_efficiency(p, 0.5), DomainError);
}

TEST_CASE("ea_efficiency monotone and dominant") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 500; ++k) {
    const auto p = random_point(rng);
    double prev = ea_efficiency(p, 1.0);
    CHECK(prev == doctest::Approx(p.eta));
    for (double g = 1.5; g < 1e6; g *= 1.7) {
      const double v = ea_efficiency(p, g);
      CHECK(v >= prev - 1e-15);
      CHECK(v >= p.eta - 1e-15);
      CHECK(v <= 1.0);
      prev = v;
    }
    CHECK(ea_efficiency(p, kInf) >= prev - 1e-15);
  }
}

TEST_CASE("zero-capacity threshold with lossless coupler") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 1000; ++k) {
    const double g = std::exp(uniform(rng, 0, 7));
    const double eta = uniform(rng, 0, 1);
    const double v = ea_efficiency(CouplerPoint::from_loss(eta, 0.0), g);
    if (std::abs(eta - 1.0 / (g + 1.0)) > 1e-9) CHECK((v > 0.5) == (eta > 1.0 / (g + 1.0)));
  }
}

TEST_CASE("output coefficients") {
  const auto p = CouplerPoint::make(0.3, 0.6, 0.4, -1.1);
  const auto c = output_coefficients(p, {1.0, 1.0});
  CHECK(std::abs(c.c_signal - std::polar(std::sqrt(0.3), 1.5)) < 1e-15);
  CHECK(std::abs(c.c_probe_vac - std::sqrt(0.6)) < 1e-15);
  CHECK(std::abs(c.c_env - std::polar(std::sqrt(0.1), 1.1)) < 1e-15);
  CHECK(std::abs(c.c_ancilla_conj) == 0.0);

  std::mt19937_64 rng(21);
  for (int k = 0; k < 1000; ++k) {
    const auto q = random_point(rng);
    const double g = std::exp(uniform(rng, 0, 7));
    const auto star = output_coefficients(q, {g, optimal_antisqueeze_gain(q.kappa, g)});
    CHECK(std::abs(star.c_ancilla_conj) <= 1e-12 * std::max(1.0, std::sqrt(g)));
    CHECK(std::norm(star.c_signal) == doctest::Approx(ea_efficiency(q, g)).epsilon(1e-12));
    const double gp = std::exp(uniform(rng, 0, 7));
    const auto any = output_coefficients(q, {g, gp});
    CHECK(std::abs(any.commutator() - 1.0) <= 1e-10 * g * gp);
  }
}

TEST_CASE("ancilla output signal gain") {
  CHECK(ancilla_output_signal_gain(CouplerPoint::make(0.3, 0.6), 1.0) == 0.0);
  CHECK(ancilla_output_signal_gain(CouplerPoint::make(0.3, 0.0), 10.0) == 0.0);
  const auto p = CouplerPoint::make(0.3, 0.6, 0.2, 0.7);
  const double expected = ea_efficiency(p, 10.0) * 0.6 * 0.9;
  CHECK(ancilla_output_signal_gain(p, 10.0) == doctest::Approx(expected).epsilon(1e-14));
  const double measured = covariance_oracle_ancilla_signal_gain(
      p, {10.0, optimal_antisqueeze_gain(0.6, 10.0)}, {});
  CHECK(measured == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("lossy noise") {
  const auto p = CouplerPoint::make(0.05, 0.9);
  CHECK(std::abs(lossy_noise(p, {10.0, optimal_antisqueeze_gain(0.9, 10.0)}, {})) < 1e-12);
  CHECK(lossy_noise(p, {1.0, 1.0}, {0.7}) == 0.0);
  const double nb = lossy_noise(p, {10.0, 2.0}, {0.95});
  CHECK(std::abs(covariance_oracle(p, {10.0, 2.0}, {0.95}).n_b - nb) < 1e-10);
}

TEST_CASE("lossy optimal gain") {
  CHECK(lossy_optimal_gain(0.4, 20.0, {}) == doctest::Approx(optimal_antisqueeze_gain(0.4, 20.0)));
  CHECK(lossy_optimal_gain(0.5, 1e7, {0.9}) == doctest::Approx(0.9 / 0.4).epsilon(1e-5));

  const auto p = CouplerPoint::make(0.2, 0.5);
  const AncillaLoss loss{0.9};
  const double g = 100.0;
  double best = 1.0;
  double best_nb = lossy_noise(p, {g, 1.0}, loss);
  for (int k = 0; k <= 2000000; ++k) {
    const double gp = 1.0 + (10.0 * g - 1.0) * k / 2000000.0;
    const double nb = lossy_noise(p, {g, gp}, loss);
    if (nb < best_nb) {
      best_nb = nb;
      best = gp;
    }
  }
  CHECK(lossy_optimal_gain(0.5, g, loss) == doctest::Approx(best).epsilon(1e-4));

  std::mt19937_64 rng(4);
  for (int k = 0; k < 300; ++k) {
    const auto q = random_point(rng);
    const double gg = std::exp(uniform(rng, 0, 6));
    const AncillaLoss l{uniform(rng, 0.05, 1.0)};
    const double opt = lossy_optimal_gain(q.kappa, gg, l);
    const double nb = lossy_noise(q, {gg, opt}, l);
    for (double f : {0.999, 1.001, 0.9, 1.1}) {
      const double other = std::max(1.0, opt * f);
      CHECK(lossy_noise(q, {gg, other}, l) >= nb - 1e-9 * (1 + nb));
    }
  }
}

TEST_CASE("covariance oracle matches analytic relations") {
  const auto p = CouplerPoint::make(0.37, 0.41, 0.3, 1.2);
  const auto o = covariance_oracle(p, {1.0, 1.0}, {});
  CHECK(o.eta_ea == doctest::Approx(0.37).epsilon(1e-13));
  CHECK(std::abs(o.n_b) < 1e-14);

  std::mt19937_64 rng(99);
  for (int k = 0; k < 1000; ++k) {
    const auto q = random_point(rng);
    const double g = gain_from_db(uniform(rng, 0, 20));
    const double gp = gain_from_db(uniform(rng, 0, 20));
    const AncillaLoss l{uniform(rng, 0.5, 1.0)};
    const auto r = covariance_oracle(q, {g, gp}, l);
    CHECK(std::abs(r.eta_ea - q.eta * gp) < 1e-10);
    CHECK(std::abs(r.n_b - lossy_noise(q, {g, gp}, l)) < 1e-10);
    const auto s = covariance_oracle(q, {g, optimal_antisqueeze_gain(q.kappa, g)}, {});
    CHECK(std::abs(s.eta_ea - ea_efficiency(q, g)) < 1e-10);
    CHECK(std::abs(s.n_b) < 1e-10);
  }
}

TEST_CASE("covariance oracle with thermal inputs keeps transmissivity") {
  const auto p = CouplerPoint::make(0.2, 0.7);
  const double gp = optimal_antisqueeze_gain(0.7, 10.0);
  const auto cold = covariance_oracle(p, {10.0, gp}, {});
  const auto warm = covariance_oracle(p, {10.0, gp}, {}, {0.5, 0.3});
  CHECK(warm.eta_ea == doctest::Approx(cold.eta_ea).epsilon(1e-12));
  CHECK(warm.n_b > cold.n_b);
}
