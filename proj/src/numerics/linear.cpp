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

#include <algorithm>
#include <cmath>
#include <utility>

#include "transduce/errors.hpp"
#include "transduce/numerics.hpp"

namespace transduce {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DomainError("ComplexMatrix: entry count does not match rows*cols");
  }
  if (!all_finite()) throw DomainError("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DomainError("ComplexMatrix: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(entries));
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("ComplexMatrix: shape mismatch in product");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw DomainError("ComplexMatrix: shape mismatch in sum");
  }
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a + Complex{-1.0, 0.0} * b;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& z : out.data_) z *= s;
  return out;
}

ComplexMatrix solve_linear_complex(const ComplexMatrix& m, const ComplexMatrix& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("solve_linear_complex: matrix not square");
  if (rhs.rows() != n) throw DomainError("solve_linear_complex: rhs row count mismatch");

  ComplexMatrix a = m;
  ComplexMatrix x = rhs;
  const std::size_t nrhs = rhs.cols();
  const double threshold = 1e-14 * a.max_abs();

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(a(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (!(best > threshold)) {
      throw SingularMatrix("solve_linear_complex: pivot below 1e-14 * max entry");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
      for (std::size_t c = 0; c < nrhs; ++c) std::swap(x(col, c), x(pivot, c));
    }
    const Complex inv = 1.0 / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = a(r, col) * inv;
      if (factor == Complex{}) continue;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      for (std::size_t c = 0; c < nrhs; ++c) x(r, c) -= factor * x(col, c);
    }
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t c = 0; c < nrhs; ++c) {
      Complex s = x(ii, c);
      for (std::size_t k = ii + 1; k < n; ++k) s -= a(ii, k) * x(k, c);
      x(ii, c) = s / a(ii, ii);
    }
  }
  return x;
}

}  // namespace transduce
