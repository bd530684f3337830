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

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "torsionkit/periodic.hpp"
#include "torsionkit/vec3.hpp"

namespace torsionkit {

/// A parametrized curve t -> gamma(t) on a uniform grid of `size()` parameters
/// t0 + j * period / N, together with its first three derivatives at those
/// parameters.
///
/// Analytic curves evaluate exact derivative closures and may be open arcs.
/// Sampled curves are periodic; their derivatives come from spectral
/// differentiation unless the caller supplies them (`from_jet`).
class CurveSampler {
 public:
  enum class Mode { Analytic, Sampled };
  using Provider = std::function<Vec3(double)>;

  static CurveSampler analytic(std::array<Provider, 4> derivatives, double period, std::size_t samples,
                               bool closed, double t0 = 0.0);
  static CurveSampler sampled(const PeriodicCurve& positions);
  /// Sampled curve with externally assembled derivative samples. Positions
  /// may carry a secular drift, in which case `closed` must be false.
  static CurveSampler from_jet(std::vector<Vec3> positions, const PeriodicCurve& d1, const PeriodicCurve& d2,
                               const PeriodicCurve& d3, bool closed);

  Mode mode() const noexcept { return mode_; }
  bool closed() const noexcept { return closed_; }
  double period() const noexcept { return period_; }
  std::size_t size() const noexcept { return jet_[0].size(); }
  double parameter(std::size_t j) const noexcept {
    return t0_ + static_cast<double>(j) * period_ / static_cast<double>(size());
  }

  /// Samples of the order-th derivative, order in 0..3.
  std::span<const Vec3> derivative(int order) const;
  std::span<const Vec3> positions() const { return derivative(0); }

  /// Exact evaluation at an arbitrary parameter; analytic mode only.
  Vec3 evaluate(int order, double t) const;

 private:
  CurveSampler(Mode mode, double period, double t0, bool closed, std::array<std::vector<Vec3>, 4> jet,
               std::array<Provider, 4> providers);

  Mode mode_;
  double period_;
  double t0_;
  bool closed_;
  std::array<std::vector<Vec3>, 4> jet_;
  std::array<Provider, 4> providers_;
};

/// Samples of a closed curve as periodic data (positions only).
PeriodicCurve as_periodic(const CurveSampler& c);

/// Analytic curve whose derivatives are computed by the Fourier series of a
/// periodic sampled curve (used where positions are known only on a grid but
/// off-grid evaluation is needed).
CurveSampler band_limited(const PeriodicCurve& positions);

}  // namespace torsionkit
