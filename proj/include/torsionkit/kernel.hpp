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

#pragma once

#include "torsionkit/graph_curve.hpp"
#include "torsionkit/periodic.hpp"

namespace torsionkit {

/// Positive 2 pi-periodic solution of f'' + f = 1 / kappa0 with vanishing
/// first harmonics.
struct KernelSolution {
  PeriodicSamples f;
  /// sup |f'' + f - 1/kappa0|, f'' taken spectrally.
  double ode_residual;
  double min_f;
  /// sup |f - f_freq| against the frequency-division solution.
  double oracle_deviation;
};

/// k(beta) = beta sin(beta) / (2 pi).
double kernel_weight(double beta);

/// f(theta) = int_{-pi}^{pi} k(beta) p(beta + theta + pi) d beta evaluated
/// as a direct circular convolution on the theta grid. k has a derivative
/// jump at +-pi, so the periodic sum is completed with the Euler-Maclaurin
/// endpoint terms h^2/12 p + h^4/720 (p - 3 p'').
PeriodicSamples kernel_convolution(const PeriodicSamples& p);

/// Independent route: mode m of f = mode m of p / (1 - m^2), |m| != 1;
/// first-harmonic modes are zero.
PeriodicSamples kernel_by_frequency_division(const PeriodicSamples& p);

/// Throws NotClosed when the closure residuals exceed `closure_tol` (no
/// periodic solution exists) and NonPositiveSolution if min f <= 0.
KernelSolution solve_kernel(const BaseCurve& base, double closure_tol = 1e-8);

}  // namespace torsionkit
