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

#include "torsionkit/curve_sampler.hpp"
#include "torsionkit/frenet.hpp"
#include "torsionkit/periodic.hpp"

namespace torsionkit {

/// beta_r(t) = r (cos t / 2 + (sqrt 2 / 4) cos 2t, sin t / 2 - (sqrt 2 / 4) sin 2t, 0).
Vec3 beta_point(double r, double t);

struct BetaCurve {
  double r;
  PeriodicCurve samples;
};

/// Throws InvalidArgument unless 0 < r <= 1.
BetaCurve beta_curve(double r, std::size_t samples = kDefaultSamples);

/// Points on the unit sphere, |B| = 1 at every sample.
class SphericalCurve {
 public:
  explicit SphericalCurve(PeriodicCurve points);
  const PeriodicCurve& points() const noexcept { return points_; }

 private:
  PeriodicCurve points_;
};

/// (x, y) -> (x, y, sqrt(1 - x^2 - y^2)); throws OutsideDisk if x^2 + y^2 >= 1.
SphericalCurve vertical_lift(const PeriodicCurve& plane);
SphericalCurve vertical_lift(const BetaCurve& beta);
SphericalCurve vertical_lift(const CurveSampler& plane);

struct KoenigsOptions {
  double closure_tol = 1e-6;
  FrenetOptions frenet{};
};

struct KoenigsResult {
  CurveSampler curve;
  double tau_target;
  /// gamma(2 pi) - gamma(0).
  Vec3 closure_defect;
  /// Torsion of `curve`; NaN where it is undefined.
  PeriodicSamples tau_profile;
  double tau_stdev;
  double kappa_min;
  /// Frenet binormal b(t) compared with the input B(t): b = orientation * B
  /// with a single orientation in {+1, -1}; deviation = max |b - orientation B|.
  int binormal_orientation;
  double binormal_deviation;
  bool orientation_consistent;
};

/// gamma(t) = (1 / tau) int_0^t B x B' dt, antidifferentiated in frequency
/// space. A nonzero mean of B x B' leaves an open curve with a reported
/// closure defect rather than an error.
/// Throws ZeroTorsionTarget or DegenerateSpeed (B x B' identically zero).
KoenigsResult koenigs_curve(const SphericalCurve& binormal, double tau_target, const KoenigsOptions& options = {});

/// (0, 0, 1) . int alpha x alpha' dt over the period: twice the enclosed area
/// counted with multiplicity. Throws NotPlanar.
double signed_area(const CurveSampler& plane);
double signed_area(const PeriodicCurve& plane);

/// Largest angle between the Euclidean binormal and its mean direction, over
/// samples where torsion is defined.
double binormal_spread(const CurveSampler& c);

/// Smallest distance between non-neighbouring parts of a closed plane curve;
/// samples within `window` grid steps are treated as neighbours.
double min_self_distance(const CurveSampler& plane, std::size_t window = 10);

/// Fit of the xy projection of `c` onto `reference`, samples matched by
/// index: both are centred, `c` is turned about z by the least-squares angle,
/// and the largest remaining pointwise distance is returned.
double rotation_fit_residual(const CurveSampler& c, const PeriodicCurve& reference);

}  // namespace torsionkit
