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

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <vector>

#include "transduce/errors.hpp"
#include "transduce/numerics.hpp"

namespace transduce {

Complex polynomial_value(std::span<const double> coeffs, Complex x) {
  Complex acc{0.0, 0.0};
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

namespace {

Complex derivative_value(std::span<const double> coeffs, Complex x) {
  const std::size_t degree = coeffs.size() - 1;
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < degree; ++k) {
    acc = acc * x + coeffs[k] * static_cast<double>(degree - k);
  }
  return acc;
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const double> coeffs) {
  auto first = std::find_if(coeffs.begin(), coeffs.end(), [](double c) { return c != 0.0; });
  if (first == coeffs.end()) throw DegenerateInput("polynomial_roots: zero polynomial");
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw DomainError("polynomial_roots: non-finite coefficient");
  }
  const std::span<const double> p(first, coeffs.end());
  const std::size_t degree = p.size() - 1;
  if (degree == 0) return {};
  if (degree > 8) throw DomainError("polynomial_roots: degree above 8");

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (std::size_t j = 0; j < degree; ++j) {
    companion(0, static_cast<Eigen::Index>(j)) = -p[j + 1] / p[0];
  }
  for (std::size_t i = 1; i < degree; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw NonConvergent("polynomial_roots: companion eigenvalue iteration failed");
  }

  std::vector<Complex> roots;
  roots.reserve(degree);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    Complex z = solver.eigenvalues()[i];
    double residual = std::abs(polynomial_value(p, z));
    for (int iter = 0; iter < 8 && residual > 0.0; ++iter) {
      const Complex d = derivative_value(p, z);
      if (d == Complex{}) break;
      const Complex candidate = z - polynomial_value(p, z) / d;
      const double cand_residual = std::abs(polynomial_value(p, candidate));
      if (!(cand_residual < residual)) break;
      z = candidate;
      residual = cand_residual;
    }
    roots.push_back(z);
  }
  return roots;
}

}  // namespace transduce
