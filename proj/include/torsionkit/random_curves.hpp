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

#include <cstddef>
#include <random>

#include "torsionkit/curve_sampler.hpp"
#include "torsionkit/graph_curve.hpp"
#include "torsionkit/periodic.hpp"

// Seeded generators for the randomized property suites.
namespace torsionkit::random_curves {

using Rng = std::mt19937_64;

/// kappa0 = 1/p with p = 1 + sum_{m=2}^{5} (a_m cos m theta + b_m sin m theta),
/// sum |a_m| + |b_m| <= 0.8. No first harmonics, so the base always closes.
PeriodicSamples convex_kappa(Rng& rng, std::size_t samples);

/// h = sum_{j=1}^{4k} (c_j cos(j theta / k) + d_j sin(j theta / k)) with
/// sup-bound `amplitude` on the coefficient sum.
HeightFunction height(Rng& rng, int winding, std::size_t base_samples, double amplitude);

/// h = a x0 + b y0 + c over the base curve: the lift is planar.
HeightFunction planar_height(Rng& rng, const BaseCurve& base, int winding, double slope);

/// Random graph curve; in Lorentz21 the height amplitude is halved until the
/// graph is spacelike with spacelike curvature vector.
GraphCurve graph(Rng& rng, MetricSignature metric, int winding, std::size_t base_samples);

/// Closed band-limited space curve with random Fourier coefficients (modes 1..4).
CurveSampler closed_space_curve(Rng& rng, std::size_t samples);

}  // namespace torsionkit::random_curves
