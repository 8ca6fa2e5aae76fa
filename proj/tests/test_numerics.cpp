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
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "transduce/errors.hpp"
#include "transduce/numerics.hpp"

using namespace transduce;

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

TEST_CASE("solve_linear_complex trivial systems") {
  ComplexMatrix rhs(2, 1, {Complex(2, 0), Complex(0, 3)});
  auto x = solve_linear_complex(ComplexMatrix::identity(2), rhs);
  CHECK(std::abs(x(0, 0) - rhs(0, 0)) == 0.0);
  ComplexMatrix d(2, 2, {Complex(2, 0), 0.0, 0.0, Complex(0, 3)});
  x = solve_linear_complex(d, rhs);
  CHECK(std::abs(x(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(x(1, 0) - 1.0) < 1e-15);
}

TEST_CASE("solve_linear_complex residual on random systems") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix m(6, 6);
    ComplexMatrix b(6, 2);
    for (std::size_t r = 0; r < 6; ++r) {
      for (std::size_t c = 0; c < 6; ++c) m(r, c) = Complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
      m(r, r) += 4.0;
      for (std::size_t c = 0; c < 2; ++c) b(r, c) = Complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
    }
    const auto x = solve_linear_complex(m, b);
    CHECK((m * x - b).max_abs() < 1e-10 * b.max_abs());
  }
}

TEST_CASE("solve_linear_complex rejects singular matrices") {
  ComplexMatrix m(2, 2, {1.0, 2.0, 2.0, 4.0});
  CHECK_THROWS_AS(solve_linear_complex(m, ComplexMatrix::identity(2)), SingularMatrix);
}

TEST_CASE("integrate_infinite basic integrals") {
  auto r = integrate_infinite([](double w) { return 1.0 / (1.0 + w * w); }, 1.0);
  CHECK(r.value == doctest::Approx(std::numbers::pi).epsilon(1e-12));
  CHECK(r.abs_error_estimate >= 0.0);
  CHECK(integrate_infinite([](double) { return 0.0; }, 1.0).value == 0.0);
  CHECK_THROWS_AS(integrate_infinite([](double) { return 1.0; }, 0.0), DomainError);
}

TEST_CASE("integrate_interval on polynomials") {
  auto r = integrate_interval([](double x) { return x * x; }, 0.0, 3.0);
  CHECK(r.value == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("quartic_lorentzian_integral against quadrature") {
  // 1 / (1 + 8 w^2 + 16 w^4) = 1 / (1 + 4 w^2)^2 integrates to pi / 4.
  CHECK(quartic_lorentzian_integral(1.0, 2.0) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-14));
  CHECK(quartic_lorentzian_integral(16.0, 0.0) ==
        doctest::Approx(std::numbers::pi / (16.0 * std::numbers::sqrt2)).epsilon(1e-14));
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const double c1 = std::exp(uniform(rng, -6, 6));
    const double c2 = uniform(rng, -1.9, 5.0) * std::sqrt(c1);
    const auto q = integrate_infinite(
        [&](double w) { return 1.0 / (c1 + 4 * c2 * w * w + 16 * w * w * w * w); },
        std::pow(c1, 0.25) / 2);
    CHECK(q.value == doctest::Approx(quartic_lorentzian_integral(c1, c2)).epsilon(1e-7));
  }
  double prev = quartic_lorentzian_integral(1.0, 1.0);
  for (double c1 = 10; c1 < 1e12; c1 *= 10) {
    const double v = quartic_lorentzian_integral(c1, 1.0);
    CHECK(v < prev);
    prev = v;
  }
  CHECK_THROWS_AS(quartic_lorentzian_integral(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(quartic_lorentzian_integral(1.0, -3.0), DomainError);
}

TEST_CASE("polynomial_roots") {
  std::vector<double> p1{1, 0, 1};
  auto r = polynomial_roots(p1);
  REQUIRE(r.size() == 2);
  CHECK(std::abs(std::abs(r[0].imag()) - 1.0) < 1e-14);
  CHECK(std::abs(r[0] - std::conj(r[1])) < 1e-14);

  std::vector<double> p2{1, -6, 11, -6};
  r = polynomial_roots(p2);
  std::vector<double> re;
  for (auto z : r) {
    CHECK(std::abs(z.imag()) < 1e-12);
    re.push_back(z.real());
  }
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(re[1] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(re[2] == doctest::Approx(3.0).epsilon(1e-13));

  std::vector<double> zero{0, 0};
  CHECK_THROWS_AS(polynomial_roots(zero), DegenerateInput);
}

TEST_CASE("polynomial_roots conjugate closure and residual") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = 1 + static_cast<int>(rng() % 8);
    std::vector<double> p(degree + 1);
    for (auto& c : p) c = uniform(rng, -3, 3);
    if (std::abs(p[0]) < 0.1) p[0] = 1.0;
    const auto roots = polynomial_roots(p);
    REQUIRE(roots.size() == static_cast<std::size_t>(degree));
    double max_coeff = 0;
    for (double c : p) max_coeff = std::max(max_coeff, std::abs(c));
    for (auto z : roots) {
      const double bound = 1e-8 * max_coeff * std::pow(std::max(1.0, std::abs(z)), degree);
      CHECK(std::abs(polynomial_value(p, z)) <= bound);
      double nearest = 1e300;
      for (auto w : roots) nearest = std::min(nearest, std::abs(std::conj(z) - w));
      CHECK(nearest < 1e-8 * std::max(1.0, std::abs(z)));
    }
  }
}

TEST_CASE("nelder_mead on simple objectives") {
  const Box box1{{-10}, {10}};
  std::vector<double> x0{0};
  auto r = nelder_mead([](std::span<const double> x) { return (x[0] - 2) * (x[0] - 2); }, x0,
                       box1, 1);
  CHECK(std::abs(r.best_x[0] - 2) < 1e-6);

  const Box box2{{-5, -5}, {5, 5}};
  std::vector<double> x1{-1, 1};
  NelderMeadOptions opts;
  opts.restarts = 8;
  auto rosen = [](std::span<const double> x) {
    return 100 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]) + (1 - x[0]) * (1 - x[0]);
  };
  r = nelder_mead(rosen, x1, box2, 3, opts);
  CHECK(r.best_value < 1e-6);

  auto again = nelder_mead(rosen, x1, box2, 3, opts);
  CHECK(again.best_value == r.best_value);
  CHECK(again.best_x == r.best_x);

  std::vector<double> origin{0, 0};
  r = nelder_mead([](std::span<const double>) { return 4.0; }, origin, box2, 9, opts);
  CHECK(r.best_value == 4.0);
  CHECK(r.best_x == origin);
}

TEST_CASE("nelder_mead parallel restarts match serial") {
  const Box box{{-3, -3, -3}, {3, 3, 3}};
  std::vector<double> x0{1, 1, 1};
  auto f = [](std::span<const double> x) {
    return std::sin(3 * x[0]) + std::cos(2 * x[1]) + x[2] * x[2] + 0.1 * x[0] * x[0];
  };
  NelderMeadOptions serial;
  NelderMeadOptions par;
  par.parallel_restarts = true;
  const auto a = nelder_mead(f, x0, box, 42, serial);
  const auto b = nelder_mead(f, x0, box, 42, par);
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_x == b.best_x);
}

TEST_CASE("reflect_into keeps points inside the box") {
  CHECK(reflect_into(1.5, 0, 1) == doctest::Approx(0.5));
  CHECK(reflect_into(-0.25, 0, 1) == doctest::Approx(0.25));
  CHECK(reflect_into(0.3, 0, 1) == 0.3);
  for (double x = -20; x < 20; x += 0.37) {
    const double y = reflect_into(x, -1, 2);
    CHECK(y >= -1);
    CHECK(y <= 2);
  }
}
