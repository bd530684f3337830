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
#include <functional>
#include <vector>

#include "torsionkit/curve_sampler.hpp"
#include "torsionkit/periodic.hpp"
#include "torsionkit/vec3.hpp"

namespace torsionkit {

/// r_cos = int cos(theta) / kappa0, r_sin = int sin(theta) / kappa0 over
/// [0, 2 pi). Both vanish exactly when the base curve closes up.
struct ClosureResidual {
  double r_cos = 0.0;
  double r_sin = 0.0;
  double norm() const;
};

struct BaseCurveOptions {
  double closure_tol = 1e-8;
};

/// A positively curved simple closed plane curve, parametrized by the angle
/// theta of its unit tangent (cos theta, sin theta) on a uniform grid over
/// [0, 2 pi).
class BaseCurve {
 public:
  const PeriodicSamples& kappa0() const noexcept { return kappa0_; }
  /// p = 1 / kappa0, the radius of curvature.
  const PeriodicSamples& radius_of_curvature() const noexcept { return radius_; }
  const ClosureResidual& closure_residual() const noexcept { return residual_; }
  /// Reconstructed plane curve (z = 0), centroid at the origin.
  const PeriodicCurve& gamma0() const noexcept { return gamma0_; }
  std::size_t size() const noexcept { return kappa0_.size(); }

 private:
  BaseCurve(PeriodicSamples kappa0, PeriodicSamples radius, ClosureResidual residual, PeriodicCurve gamma0)
      : kappa0_(std::move(kappa0)), radius_(std::move(radius)), residual_(residual), gamma0_(std::move(gamma0)) {}

  PeriodicSamples kappa0_;
  PeriodicSamples radius_;
  ClosureResidual residual_;
  PeriodicCurve gamma0_;

  friend BaseCurve base_from_kappa(const PeriodicSamples& kappa0, const BaseCurveOptions& options);
};

ClosureResidual closure_residuals(const PeriodicSamples& kappa0);

/// Rebuilds the base curve from kappa0(theta) by integrating
/// (cos theta, sin theta) / kappa0 in frequency space.
/// Throws NonPositiveCurvature or NotClosed.
BaseCurve base_from_kappa(const PeriodicSamples& kappa0, const BaseCurveOptions& options = {});

/// Resamples a closed convex plane curve by tangent angle. Throws NotPlanar,
/// NonConvex (curvature changes sign, or total turning is not +-2 pi) or
/// NotSimple. A clockwise curve is reversed first.
BaseCurve base_from_plane_curve(const CurveSampler& c, std::size_t samples = kDefaultSamples,
                                const BaseCurveOptions& options = {});

/// Height over the base curve, periodic in theta with period 2 pi k.
class HeightFunction {
 public:
  HeightFunction(PeriodicSamples h, int winding);

  /// Samples fn on `winding * base_samples` points of [0, 2 pi k).
  static HeightFunction sample(const std::function<double(double)>& fn, int winding, std::size_t base_samples);

  const PeriodicSamples& h() const noexcept { return h_; }
  int winding() const noexcept { return winding_; }

 private:
  PeriodicSamples h_;
  int winding_;
};

/// Graph (gamma0(theta mod 2 pi), h(theta)) over a base curve. In Lorentz21
/// construction requires a spacelike tangent and curvature vector
/// everywhere and throws NotSpacelike otherwise.
class GraphCurve {
 public:
  GraphCurve(BaseCurve base, HeightFunction height, MetricSignature metric);

  const BaseCurve& base() const noexcept { return base_; }
  const HeightFunction& height() const noexcept { return height_; }
  MetricSignature metric() const noexcept { return metric_; }
  int winding() const noexcept { return height_.winding(); }
  std::size_t size() const noexcept { return height_.h().size(); }

  /// kappa0 and f-like base quantities repeated over the k windings.
  PeriodicSamples tiled(const PeriodicSamples& base_samples) const;

  /// u = kappa0 h' and its first two theta-derivatives.
  struct Bracket {
    PeriodicSamples u, du, ddu;
  };
  const Bracket& bracket() const noexcept { return bracket_; }
  /// (u')^2 + u^2 + 1 in Euclidean3, (u')^2 + u^2 - 1 in Lorentz21.
  PeriodicSamples weight() const;

 private:
  BaseCurve base_;
  HeightFunction height_;
  MetricSignature metric_;
  static Bracket make_bracket(const BaseCurve& base, const HeightFunction& height);

  Bracket bracket_;
};

/// The closed space curve over [0, 2 pi k) with derivatives assembled from
/// p = 1 / kappa0 and spectral derivatives of p and h.
CurveSampler lift(const GraphCurve& g);

/// tau = kappa0 (u'' + u) / ((u')^2 + u^2 +- 1), u = kappa0 h'.
PeriodicSamples graph_torsion(const GraphCurve& g);

struct SpacelikeFlags {
  std::vector<bool> tangent;
  std::vector<bool> curvature;
  bool all() const;
};

/// Lorentzian causal character of the tangent and of the arc-length curvature
/// vector at every sample.
SpacelikeFlags spacelike_check(const CurveSampler& c);

}  // namespace torsionkit
