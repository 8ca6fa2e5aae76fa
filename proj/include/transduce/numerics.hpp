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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace transduce {

using Complex = std::complex<double>;

// Small dense complex matrix, row-major. Sized for the 4x8 and 6x10 transfer
// blocks of the cavity models; nothing here is tuned for large systems.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const { return data_; }
  double max_abs() const;
  bool all_finite() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Solves M X = rhs by partial-pivot elimination.
// Throws SingularMatrix when a pivot falls below 1e-14 * max|M|.
ComplexMatrix solve_linear_complex(const ComplexMatrix& m, const ComplexMatrix& rhs);

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  // Absolute floor, multiplied by the length scale of the integral
  // (scale_hint on the real line, interval length on a finite interval).
  double abs_tol_per_scale = 1e-12;
  std::size_t max_panels = 4000;
  // Number of equal panels the domain is split into before refinement.
  std::size_t initial_panels = 16;
};

using RealFunction = std::function<double(double)>;

// Integral of f over the real line. The substitution w = scale_hint * tan(x)
// maps the line onto (-pi/2, pi/2), where globally adaptive Gauss-Kronrod
// 7/15 panels are refined until the error estimate meets the tolerance.
// f must decay at least as w^-2. Throws NonConvergent when the panel budget
// runs out and DomainError for scale_hint <= 0.
QuadratureResult integrate_infinite(const RealFunction& f, double scale_hint,
                                    const QuadratureOptions& options = {});

// Same engine on a finite interval [a, b].
QuadratureResult integrate_interval(const RealFunction& f, double a, double b,
                                    const QuadratureOptions& options = {});

// Closed form of the integral of 1 / (c1 + 4 c2 w^2 + 16 w^4) over the line.
// Requires c1 > 0 and c2 + 2 sqrt(c1) > 0.
double quartic_lorentzian_integral(double c1, double c2);

// Roots of sum_k coeffs[k] x^(n-k) (highest degree first) as companion-matrix
// eigenvalues, each polished by Newton steps on the original polynomial.
// Leading zeros are stripped; an all-zero input throws DegenerateInput.
std::vector<Complex> polynomial_roots(std::span<const double> coeffs);

// Value of a real-coefficient polynomial (highest degree first) at x.
Complex polynomial_value(std::span<const double> coeffs, Complex x);

struct Box {
  std::vector<double> lower;
  std::vector<double> upper;
};

struct NelderMeadOptions {
  std::size_t restarts = 16;
  // Function-evaluation budget per restart is evals_per_dim * dimension.
  std::size_t evals_per_dim = 400;
  double f_tol = 1e-14;
  double x_tol = 1e-10;
  // Initial simplex edge as a fraction of the box width.
  double initial_step = 0.1;
  // Restarts may run on worker threads; the reduction is always in restart order.
  bool parallel_restarts = false;
};

struct OptimizeResult {
  std::vector<double> best_x;
  double best_value = 0.0;
  std::size_t evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

// Minimizes objective within the box. Restart 0 starts from x0; later restarts
// start from points drawn uniformly over the box by a generator seeded with
// `seed`. Trial points outside the box are folded back by reflection. Ties
// between equal best values go to the smaller parameter 2-norm.
OptimizeResult nelder_mead(const Objective& objective, std::span<const double> x0,
                           const Box& bounds, std::uint64_t seed,
                           const NelderMeadOptions& options = {});

// Folds x into [lo, hi] by mirror reflection at the walls.
double reflect_into(double x, double lo, double hi);

}  // namespace transduce
