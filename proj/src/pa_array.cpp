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


#include "transduce/pa_array.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "transduce/errors.hpp"
#include "transduce/metrics.hpp"
#include "transduce/numerics.hpp"
#include "transduce/parallel.hpp"
#include "transduce/simd/kernels.hpp"

namespace transduce {

void PaStage::validate() const {
  if (!(g >= 0.0 && g < 1.0)) {
    throw DomainError("PaStage: g must lie in [0, 1), got " + std::to_string(g));
  }
  if (!(half_linewidth > 0.0) || !std::isfinite(half_linewidth)) {
    throw DomainError("PaStage: half_linewidth must be positive and finite");
  }
}

namespace {

void check_omega(double omega) {
  if (!std::isfinite(omega)) throw DomainError("pa_array: omega must be finite");
}

double role_sign(PaRole role) { return role == PaRole::antisqueezer ? -1.0 : 1.0; }

std::vector<simd::PaKernelStage> kernel_stages(std::span<const PaStage> stages) {
  std::vector<simd::PaKernelStage> out;
  out.reserve(stages.size());
  for (const PaStage& s : stages) out.push_back({s.g, s.half_linewidth, role_sign(s.role)});
  return out;
}

// Signed (|mu|, +-|nu|) of the array, with the common phase dropped.
void array_real_amplitudes(std::span<const PaStage> stages, double omega, double& m,
                           double& n) {
  const std::vector<simd::PaKernelStage> ks = kernel_stages(stages);
  simd::detail::pa_compose_scalar(ks.data(), ks.size(), &omega, 1, &m, &n);
}

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

constexpr double kLogitBound = 12.0;

}  // namespace

double stage_gain(double omega, const PaStage& stage) {
  stage.validate();
  check_omega(omega);
  const double x = omega / stage.half_linewidth;
  const double g2 = stage.g * stage.g;
  const double a = 1.0 - g2 - x * x;
  return 1.0 + 4.0 * g2 / (a * a + 4.0 * x * x);
}

Su11Amplitude stage_amplitude(double omega, const PaStage& stage) {
  stage.validate();
  check_omega(omega);
  const double gam = stage.half_linewidth;
  const std::complex<double> loss(gam, -omega);
  const std::complex<double> d = loss * loss - stage.g * stage.g * gam * gam;
  Su11Amplitude out;
  out.mu = (gam * gam * (1.0 + stage.g * stage.g) + omega * omega) / d;
  out.nu = role_sign(stage.role) * 2.0 * stage.g * gam * gam / d;
  return out;
}

Su11Amplitude compose(const Su11Amplitude& first, const Su11Amplitude& next) {
  Su11Amplitude out;
  out.mu = next.mu * first.mu + next.nu * first.nu;
  out.nu = next.mu * first.nu + next.nu * first.mu;
  return out;
}

Su11Amplitude array_amplitude(std::span<const PaStage> stages, double omega) {
  if (stages.empty()) throw DomainError("array_amplitude: empty stage list");
  Su11Amplitude total = stage_amplitude(omega, stages.front());
  for (std::size_t i = 1; i < stages.size(); ++i) {
    total = compose(total, stage_amplitude(omega, stages[i]));
  }
  return total;
}

double compose_array(std::span<const PaStage> stages, double omega) {
  return array_amplitude(stages, omega).gain();
}

std::vector<PaStage> alternating_array(std::span<const double> g,
                                       std::span<const double> half_linewidth) {
  if (g.size() != half_linewidth.size()) {
    throw DomainError("alternating_array: size mismatch");
  }
  std::vector<PaStage> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[i] = {g[i], half_linewidth[i], i % 2 == 0 ? PaRole::antisqueezer : PaRole::squeezer};
    out[i].validate();
  }
  return out;
}

double mismatch_noise(double kappa, double g_in, double g_prime, PaRole role) {
  if (!(kappa >= -1e-12 && kappa <= 1.0 + 1e-12)) {
    throw DomainError("mismatch_noise: kappa must lie in [0, 1]");
  }
  if (!(g_in >= 1.0) || !std::isfinite(g_in)) {
    throw DomainError("mismatch_noise: G must be finite and >= 1");
  }
  if (!(g_prime >= 1.0) || !std::isfinite(g_prime)) {
    throw DomainError("mismatch_noise: G' must be finite and >= 1");
  }
  const double k = std::clamp(kappa, 0.0, 1.0);
  const double a = std::sqrt(g_in * (g_prime - 1.0));
  const double b = std::sqrt((g_in - 1.0) * k * g_prime);
  const double v = role == PaRole::antisqueezer ? a - b : a + b;
  return v * v;
}

double mismatch_noise_amplitudes(double kappa, double g_in, double m, double n) {
  if (!(kappa >= -1e-12 && kappa <= 1.0 + 1e-12) || !(g_in >= 1.0) || !std::isfinite(g_in)) {
    throw DomainError("mismatch_noise_amplitudes: invalid kappa or G");
  }
  const double v = std::sqrt(std::clamp(kappa, 0.0, 1.0) * (g_in - 1.0)) * m + std::sqrt(g_in) * n;
  return v * v;
}

double noiseless_gain_target(double omega, const CouplerPoint& point, double g_in) {
  check_omega(omega);
  return optimal_antisqueeze_gain(point.kappa, g_in);
}

namespace {

double integrate_rate(const EoCavityParams& cavity, const RealFunction& rate) {
  cavity.validate();
  const std::vector<double> scan = default_grid(cavity, 2001);
  return broadband_rate(rate, scan);
}

}  // namespace

double non_ea_rate(const EoCavityParams& cavity) {
  return integrate_rate(cavity, [&](double w) { return q1_pointwise(coupler_point(w, cavity).eta); });
}

double noiseless_rate(const EoCavityParams& cavity, double g_in) {
  return integrate_rate(cavity, [&](double w) {
    return q_lb_pointwise(ea_efficiency(coupler_point(w, cavity), g_in), 0.0);
  });
}

double constant_gain_rate(const EoCavityParams& cavity, double g_in, double g_prime) {
  return integrate_rate(cavity, [&](double w) {
    const CouplerPoint pt = coupler_point(w, cavity);
    return q_lb_pointwise(pt.eta * g_prime,
                          mismatch_noise(pt.kappa, g_in, g_prime, PaRole::antisqueezer));
  });
}

double array_rate(const EoCavityParams& cavity, double g_in, std::span<const PaStage> stages) {
  if (stages.empty()) throw DomainError("array_rate: empty stage list");
  for (const PaStage& s : stages) s.validate();
  return integrate_rate(cavity, [&](double w) {
    const CouplerPoint pt = coupler_point(w, cavity);
    double m = 1.0;
    double n = 0.0;
    array_real_amplitudes(stages, w, m, n);
    return q_lb_pointwise(pt.eta * m * m, mismatch_noise_amplitudes(pt.kappa, g_in, m, n));
  });
}

ConstantGainScan constant_gain_scan(const EoCavityParams& cavity, double g_in, double span_db,
                                    std::size_t points) {
  if (points < 2 || !(span_db > 0.0)) throw DomainError("constant_gain_scan: bad scan");
  const double peak = conversion_peak_frequency(cavity);
  const double g0 = optimal_antisqueeze_gain(coupler_point(peak, cavity).kappa, g_in);
  const double lo = std::max(-span_db, -10.0 * std::log10(g0));
  ConstantGainScan out;
  out.relative_db.resize(points);
  out.advantage.resize(points);
  const double base = non_ea_rate(cavity);
  for (std::size_t i = 0; i < points; ++i) {
    out.relative_db[i] = lo + (span_db - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  parallel_for(points, [&](std::size_t i) {
    const double gp = std::max(1.0, g0 * std::pow(10.0, out.relative_db[i] / 10.0));
    out.advantage[i] = constant_gain_rate(cavity, g_in, gp) / base;
  });
  const auto best = std::max_element(out.advantage.begin(), out.advantage.end());
  out.best_advantage = *best;
  out.best_relative_db = out.relative_db[static_cast<std::size_t>(best - out.advantage.begin())];
  return out;
}

namespace {

// Uniform-grid trapezoid estimate of the EA rate for many candidate arrays.
class GridObjective {
 public:
  GridObjective(const EoCavityParams& cavity, double g_in, std::size_t points)
      : g_in_(g_in), omega_(default_grid(cavity, points)) {
    eta_.resize(omega_.size());
    kappa_.resize(omega_.size());
    for (std::size_t i = 0; i < omega_.size(); ++i) {
      const CouplerPoint pt = coupler_point(omega_[i], cavity);
      eta_[i] = pt.eta;
      kappa_[i] = pt.kappa;
    }
    step_ = (omega_.back() - omega_.front()) / static_cast<double>(omega_.size() - 1);
  }

  struct Buffers {
    std::vector<double> m, n, eta_ea, n_b;
  };

  double rate(std::span<const simd::PaKernelStage> stages, Buffers& b) const {
    const std::size_t count = omega_.size();
    b.m.resize(count);
    b.n.resize(count);
    b.eta_ea.resize(count);
    b.n_b.resize(count);
    simd::pa_compose(stages, omega_, b.m, b.n);
    simd::ea_noise(g_in_, eta_, kappa_, b.m, b.n, b.eta_ea, b.n_b);
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double q = q_lb_pointwise(b.eta_ea[i], b.n_b[i]);
      sum += (i == 0 || i + 1 == count) ? 0.5 * q : q;
    }
    return sum * step_ / (2.0 * M_PI);
  }

 private:
  double g_in_;
  std::vector<double> omega_;
  std::vector<double> eta_;
  std::vector<double> kappa_;
  double step_ = 0.0;
};

std::vector<PaStage> to_stages(std::span<const simd::PaKernelStage> ks) {
  std::vector<PaStage> out;
  for (const simd::PaKernelStage& s : ks) {
    out.push_back({s.g, s.gamma, s.sign < 0.0 ? PaRole::antisqueezer : PaRole::squeezer});
  }
  return out;
}

std::vector<simd::PaKernelStage> decode(std::span<const double> x) {
  std::vector<simd::PaKernelStage> out(x.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = {logistic(x[2 * i]), std::exp(x[2 * i + 1]), i % 2 == 0 ? -1.0 : 1.0};
  }
  return out;
}

}  // namespace

PaArrayResult optimize_array(std::size_t n_stages, double g_in, const EoCavityParams& cavity,
                             std::uint64_t seed, const PaOptimizeOptions& options) {
  if (n_stages < 1 || n_stages > 8) throw DomainError("optimize_array: n_stages must be 1..8");
  if (!(g_in >= 1.0) || !std::isfinite(g_in)) {
    throw DomainError("optimize_array: G must be finite and >= 1");
  }
  cavity.validate();
  PaArrayResult result;
  result.non_ea_rate = non_ea_rate(cavity);

  if (g_in == 1.0) {
    for (std::size_t i = 0; i < n_stages; ++i) {
      result.stages.push_back(
          {0.0, cavity.gamma_s, i % 2 == 0 ? PaRole::antisqueezer : PaRole::squeezer});
    }
    result.q_lb_rate = array_rate(cavity, g_in, result.stages);
    result.advantage = result.q_lb_rate / result.non_ea_rate;
    GridObjective::Buffers buffers;
    const double grid_rate = GridObjective(cavity, g_in, options.grid_points)
                                 .rate(kernel_stages(result.stages), buffers);
    result.objective_by_depth.assign(n_stages, grid_rate);
    for (std::size_t d = 1; d <= n_stages; ++d) {
      result.stages_by_depth.emplace_back(result.stages.begin(), result.stages.begin() + d);
    }
    return result;
  }

  const GridObjective grid(cavity, g_in, options.grid_points);
  const double log_lo = std::log(1e-3 * cavity.gamma_s);
  const double log_hi = std::log(1e3 * cavity.gamma_s);
  const std::size_t restarts = std::max<std::size_t>(1, options.restarts);

  std::vector<double> incumbent;
  for (std::size_t depth = 1; depth <= n_stages; ++depth) {
    Box box;
    for (std::size_t i = 0; i < depth; ++i) {
      box.lower.insert(box.lower.end(), {-kLogitBound, log_lo});
      box.upper.insert(box.upper.end(), {kLogitBound, log_hi});
    }

    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * depth));
    std::vector<std::vector<double>> starts(restarts);
    std::vector<std::uint64_t> seeds(restarts);
    for (std::size_t r = 0; r < restarts; ++r) {
      std::vector<double>& x = starts[r];
      x = incumbent;
      if (r == 0) {
        x.insert(x.end(), {-kLogitBound, std::log(cavity.gamma_s)});
      } else {
        for (std::size_t i = 0; i < x.size(); ++i) {
          x[i] = reflect_into(x[i] + (unit_uniform(rng) - 0.5), box.lower[i], box.upper[i]);
        }
        const double logit = -4.0 + 8.0 * unit_uniform(rng);
        const double lg = std::log(0.1 * cavity.gamma_s) + std::log(300.0) * unit_uniform(rng);
        x.insert(x.end(), {logit, lg});
      }
      seeds[r] = rng();
    }

    std::vector<OptimizeResult> runs(restarts);
    NelderMeadOptions nm;
    nm.restarts = 1;
    nm.evals_per_dim = options.evals_per_dim;
    const auto run_one = [&](std::size_t r) {
      GridObjective::Buffers buffers;
      const Objective objective = [&](std::span<const double> x) {
        return -grid.rate(decode(x), buffers);
      };
      runs[r] = nelder_mead(objective, starts[r], box, seeds[r], nm);
    };
    if (options.parallel_restarts) {
      parallel_for(restarts, run_one);
    } else {
      for (std::size_t r = 0; r < restarts; ++r) run_one(r);
    }

    std::size_t best = 0;
    for (std::size_t r = 0; r < restarts; ++r) {
      result.evaluations += runs[r].evaluations;
      if (runs[r].best_value < runs[best].best_value) best = r;
    }
    incumbent = runs[best].best_x;
    result.objective_by_depth.push_back(-runs[best].best_value);
    result.stages_by_depth.push_back(to_stages(decode(incumbent)));
  }

  result.stages = result.stages_by_depth.back();
  result.q_lb_rate = array_rate(cavity, g_in, result.stages);
  result.advantage = result.q_lb_rate / result.non_ea_rate;
  return result;
}

}  // namespace transduce
