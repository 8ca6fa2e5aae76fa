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
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "transduce/errors.hpp"
#include "transduce/numerics.hpp"
#include "transduce/parallel.hpp"

namespace transduce {

double reflect_into(double x, double lo, double hi) {
  if (x >= lo && x <= hi) return x;
  const double width = hi - lo;
  if (!(width > 0.0)) return lo;
  double t = std::fmod(x - lo, 2.0 * width);
  if (t < 0.0) t += 2.0 * width;
  return t <= width ? lo + t : hi - (t - width);
}

namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

double norm2(const std::vector<double>& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

// Ordering used everywhere a "best" is chosen: lower value, then smaller norm.
bool better(double fa, const std::vector<double>& xa, double fb,
            const std::vector<double>& xb) {
  if (fa != fb) return fa < fb;
  return norm2(xa) < norm2(xb);
}

// Mantissa-exact uniform draw, independent of the standard library's
// distribution implementation.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

class Simplex {
 public:
  Simplex(const Objective& objective, const Box& box, std::size_t budget,
          const NelderMeadOptions& options)
      : objective_(objective), box_(box), budget_(budget), options_(options) {}

  Vertex run(std::vector<double> start) {
    Vertex best = build(std::move(start));
    // Rebuild the simplex around the incumbent until a rebuild stops helping.
    while (evaluations_ < budget_) {
      iterate();
      const Vertex& incumbent = vertices_.front();
      const bool improved = incumbent.f < best.f;
      if (improved) best = incumbent;
      if (!improved || evaluations_ >= budget_) break;
      build(best.x);
    }
    return best;
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  double evaluate(const std::vector<double>& x) {
    ++evaluations_;
    const double v = objective_(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  }

  std::vector<double> clamp(std::vector<double> x) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = reflect_into(x[i], box_.lower[i], box_.upper[i]);
    }
    return x;
  }

  Vertex build(std::vector<double> start) {
    const std::size_t n = start.size();
    vertices_.clear();
    start = clamp(std::move(start));
    vertices_.push_back({start, evaluate(start)});
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> x = start;
      const double width = box_.upper[i] - box_.lower[i];
      double step = options_.initial_step * width;
      if (x[i] + step > box_.upper[i]) step = -step;
      x[i] += step;
      x = clamp(std::move(x));
      vertices_.push_back({x, evaluate(x)});
    }
    sort();
    return vertices_.front();
  }

  void sort() {
    // Stable on ties so the incumbent keeps its place; the norm tie-break
    // applies only between restarts.
    std::stable_sort(vertices_.begin(), vertices_.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  }

  bool converged() const {
    const double fbest = vertices_.front().f;
    const double fworst = vertices_.back().f;
    const double spread = std::abs(fworst - fbest);
    const double fscale = options_.f_tol * (std::abs(fbest) + std::abs(fworst)) + 1e-300;
    double size = 0.0;
    for (std::size_t k = 1; k < vertices_.size(); ++k) {
      for (std::size_t i = 0; i < vertices_[k].x.size(); ++i) {
        size = std::max(size, std::abs(vertices_[k].x[i] - vertices_[0].x[i]));
      }
    }
    return spread <= fscale && size <= options_.x_tol;
  }

  void iterate() {
    const std::size_t n = vertices_.front().x.size();
    while (evaluations_ < budget_ && !converged()) {
      std::vector<double> centroid(n, 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) centroid[i] += vertices_[k].x[i];
      }
      for (double& c : centroid) c /= static_cast<double>(n);

      const Vertex& worst = vertices_.back();
      const auto along = [&](double t) {
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = centroid[i] + t * (worst.x[i] - centroid[i]);
        return clamp(std::move(x));
      };

      std::vector<double> xr = along(-1.0);
      const double fr = evaluate(xr);
      if (fr < vertices_.front().f) {
        std::vector<double> xe = along(-2.0);
        const double fe = evaluate(xe);
        vertices_.back() = fe < fr ? Vertex{std::move(xe), fe} : Vertex{std::move(xr), fr};
      } else if (fr < vertices_[n - 1].f) {
        vertices_.back() = {std::move(xr), fr};
      } else {
        const bool outside = fr < worst.f;
        std::vector<double> xc = along(outside ? -0.5 : 0.5);
        const double fc = evaluate(xc);
        if (fc < (outside ? fr : worst.f)) {
          vertices_.back() = {std::move(xc), fc};
        } else {
          const std::vector<double> best = vertices_.front().x;
          for (std::size_t k = 1; k < vertices_.size(); ++k) {
            for (std::size_t i = 0; i < n; ++i) {
              vertices_[k].x[i] = best[i] + 0.5 * (vertices_[k].x[i] - best[i]);
            }
            vertices_[k].x = clamp(std::move(vertices_[k].x));
            vertices_[k].f = evaluate(vertices_[k].x);
          }
        }
      }
      sort();
    }
  }

  const Objective& objective_;
  const Box& box_;
  std::size_t budget_;
  const NelderMeadOptions& options_;
  std::size_t evaluations_ = 0;
  std::vector<Vertex> vertices_;
};

}  // namespace

OptimizeResult nelder_mead(const Objective& objective, std::span<const double> x0,
                           const Box& bounds, std::uint64_t seed,
                           const NelderMeadOptions& options) {
  const std::size_t n = x0.size();
  if (n == 0) throw DomainError("nelder_mead: empty parameter vector");
  if (bounds.lower.size() != n || bounds.upper.size() != n) {
    throw DomainError("nelder_mead: bounds dimension mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(bounds.lower[i]) || !std::isfinite(bounds.upper[i]) ||
        bounds.lower[i] > bounds.upper[i]) {
      throw DomainError("nelder_mead: bounds must be finite and ordered");
    }
    if (x0[i] < bounds.lower[i] || x0[i] > bounds.upper[i]) {
      throw DomainError("nelder_mead: x0 outside bounds");
    }
  }
  const std::size_t restarts = std::max<std::size_t>(1, options.restarts);

  // Starting points are drawn up front so they do not depend on scheduling.
  std::vector<std::vector<double>> starts(restarts);
  starts[0].assign(x0.begin(), x0.end());
  std::mt19937_64 rng(seed);
  for (std::size_t r = 1; r < restarts; ++r) {
    starts[r].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      starts[r][i] = bounds.lower[i] + unit_uniform(rng) * (bounds.upper[i] - bounds.lower[i]);
    }
  }

  std::vector<Vertex> results(restarts);
  std::vector<std::size_t> counts(restarts, 0);
  const auto run_one = [&](std::size_t r) {
    Simplex simplex(objective, bounds, options.evals_per_dim * n, options);
    results[r] = simplex.run(starts[r]);
    counts[r] = simplex.evaluations();
  };
  if (options.parallel_restarts) {
    parallel_for(restarts, run_one);
  } else {
    for (std::size_t r = 0; r < restarts; ++r) run_one(r);
  }

  OptimizeResult out;
  out.best_x = results[0].x;
  out.best_value = results[0].f;
  for (std::size_t r = 0; r < restarts; ++r) {
    out.evaluations += counts[r];
    if (r > 0 && better(results[r].f, results[r].x, out.best_value, out.best_x)) {
      out.best_x = results[r].x;
      out.best_value = results[r].f;
    }
  }
  return out;
}

}  // namespace transduce
