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
#include <vector>

#include "torsionkit/curve_sampler.hpp"
#include "torsionkit/periodic.hpp"
#include "torsionkit/vec3.hpp"

namespace torsionkit {

struct FrenetOptions {
  /// Torsion is undefined where |gamma' x gamma''| <= kappa_min * scale^3,
  /// scale = max |gamma'|.
  double kappa_min = 1e-9;
};

/// Per-sample Frenet frame, curvature and torsion.
///
/// Torsion is tau = ((g' x g'') . g''') / |g' x g''|^2 with products taken in
/// the chosen metric, so the right-handed helix has tau > 0 in Euclidean3.
/// In Lorentz21 the denominator is negative for a spacelike osculating plane,
/// and the frame obeys
///   T' = c kappa N,  N' = c (-kappa T + tau B),  B' = +c tau N,
/// since B is timelike (<B,B> = -1). Where `tau_defined[j]` is false the
/// normal and binormal are zero and tau is NaN.
struct FrenetData {
  MetricSignature metric = MetricSignature::Euclidean3;
  double period = 0.0;
  std::vector<double> parameter;
  std::vector<Vec3> tangent;
  std::vector<Vec3> normal;
  std::vector<Vec3> binormal;
  std::vector<double> speed;
  std::vector<double> kappa;
  std::vector<double> tau;
  std::vector<bool> tau_defined;

  std::size_t size() const noexcept { return kappa.size(); }
  std::size_t defined_count() const;
  double tau_min() const;  // over defined samples; NaN if none
  double tau_max() const;
  double kappa_min() const;
};

FrenetData frenet_apparatus(const CurveSampler& c, MetricSignature m, const FrenetOptions& options = {});

/// (g' x g'') . g''' per sample. The value is the same under either metric
/// (both sign flips cancel); `m` exists so that can be checked.
PeriodicSamples torsion_sign_numerator(const CurveSampler& c,
                                       MetricSignature m = MetricSignature::Euclidean3);

/// Max distance of the samples to their least-squares plane, divided by the
/// diameter of the sample set.
double plane_fit_residual(const CurveSampler& c);

}  // namespace torsionkit
