/*
 * Copyright 2026 The torsionkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "torsionkit/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"

namespace torsionkit {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kModule = "kernel-theorem";

}  // namespace

double kernel_weight(double beta) { return beta * std::sin(beta) / (2.0 * kPi); }

PeriodicSamples kernel_convolution(const PeriodicSamples& p) {
  const std::size_t n = p.size();
  const double h = p.spacing();
  // beta_j = -pi + j h, so p(beta_j + theta_i + pi) = p[(i + j) mod n].
  std::vector<double> k(n);
  for (std::size_t j = 0; j < n; ++j) k[j] = kernel_weight(-kPi + static_cast<double>(j) * h);

  const PeriodicSamples ddp = spectral_derivative(p, 2);
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n - i; ++j) sum += k[j] * p[i + j];
    for (std::size_t j = n - i; j < n; ++j) sum += k[j] * p[i + j - n];
    f[i] = h * sum + h * h / 12.0 * p[i] + h * h * h * h / 720.0 * (p[i] - 3.0 * ddp[i]);
  }
  return PeriodicSamples(std::move(f), p.period());
}

PeriodicSamples kernel_by_frequency_division(const PeriodicSamples& p) {
  auto modes = detail::rfft(p.values());
  for (std::size_t m = 0; m < modes.size(); ++m) {
    if (m == 1) {
      modes[m] = 0.0;
    } else {
      const double md = static_cast<double>(m);
      modes[m] /= (1.0 - md * md);
    }
  }
  return PeriodicSamples(detail::irfft(modes, p.size()), p.period());
}

KernelSolution solve_kernel(const BaseCurve& base, double closure_tol) {
  const ClosureResidual& r = base.closure_residual();
  if (!(std::abs(r.r_cos) <= closure_tol && std::abs(r.r_sin) <= closure_tol)) {
    throw Error(ErrorCode::NotClosed, kModule, "closure residuals exceed tolerance; f'' + f = 1/kappa0 has no periodic solution");
  }
  const PeriodicSamples& p = base.radius_of_curvature();
  PeriodicSamples f = kernel_convolution(p);
  const PeriodicSamples oracle = kernel_by_frequency_division(p);
  const PeriodicSamples ddf = spectral_derivative(f, 2);

  double residual = 0.0;
  double deviation = 0.0;
  double min_f = f[0];
  for (std::size_t j = 0; j < f.size(); ++j) {
    residual = std::max(residual, std::abs(ddf[j] + f[j] - p[j]));
    deviation = std::max(deviation, std::abs(f[j] - oracle[j]));
    min_f = std::min(min_f, f[j]);
  }
  if (!(min_f > 0.0)) {
    throw Error(ErrorCode::NonPositiveSolution, kModule, "kernel solution has min f = " + std::to_string(min_f));
  }
  return KernelSolution{std::move(f), residual, min_f, deviation};
}

}  // namespace torsionkit
