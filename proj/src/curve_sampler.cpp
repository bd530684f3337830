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

#include "torsionkit/curve_sampler.hpp"

#include <memory>
#include <string>

namespace torsionkit {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, "geometry-core", message);
}

}  // namespace

CurveSampler::CurveSampler(Mode mode, double period, double t0, bool closed, std::array<std::vector<Vec3>, 4> jet,
                           std::array<Provider, 4> providers)
    : mode_(mode), period_(period), t0_(t0), closed_(closed), jet_(std::move(jet)), providers_(std::move(providers)) {
  for (const auto& d : jet_) {
    for (const Vec3& v : d) require(is_finite(v), "curve samples must be finite");
  }
}

CurveSampler CurveSampler::analytic(std::array<Provider, 4> derivatives, double period, std::size_t samples,
                                    bool closed, double t0) {
  require(samples >= kMinSamples, "analytic curve needs at least 16 samples");
  require(period > 0.0, "period must be positive");
  for (const auto& p : derivatives) require(static_cast<bool>(p), "all four derivative providers are required");
  std::array<std::vector<Vec3>, 4> jet;
  for (int order = 0; order < 4; ++order) {
    auto& d = jet[static_cast<std::size_t>(order)];
    d.resize(samples);
    for (std::size_t j = 0; j < samples; ++j) {
      d[j] = derivatives[static_cast<std::size_t>(order)](t0 + static_cast<double>(j) * period /
                                                          static_cast<double>(samples));
    }
  }
  return CurveSampler(Mode::Analytic, period, t0, closed, std::move(jet), std::move(derivatives));
}

CurveSampler CurveSampler::sampled(const PeriodicCurve& positions) {
  std::array<std::vector<Vec3>, 4> jet;
  jet[0].assign(positions.begin(), positions.end());
  for (int order = 1; order <= 3; ++order) {
    auto d = spectral_derivative(positions, order);
    jet[static_cast<std::size_t>(order)].assign(d.begin(), d.end());
  }
  return CurveSampler(Mode::Sampled, positions.period(), 0.0, true, std::move(jet), {});
}

CurveSampler CurveSampler::from_jet(std::vector<Vec3> positions, const PeriodicCurve& d1, const PeriodicCurve& d2,
                                    const PeriodicCurve& d3, bool closed) {
  require(positions.size() == d1.size() && d1.size() == d2.size() && d2.size() == d3.size(),
          "jet sample counts must agree");
  require(d1.period() == d2.period() && d2.period() == d3.period(), "jet periods must agree");
  std::array<std::vector<Vec3>, 4> jet;
  jet[0] = std::move(positions);
  jet[1].assign(d1.begin(), d1.end());
  jet[2].assign(d2.begin(), d2.end());
  jet[3].assign(d3.begin(), d3.end());
  return CurveSampler(Mode::Sampled, d1.period(), 0.0, closed, std::move(jet), {});
}

std::span<const Vec3> CurveSampler::derivative(int order) const {
  require(order >= 0 && order <= 3, "derivative order must be in 0..3");
  return jet_[static_cast<std::size_t>(order)];
}

Vec3 CurveSampler::evaluate(int order, double t) const {
  require(mode_ == Mode::Analytic, "off-grid evaluation needs an analytic curve");
  require(order >= 0 && order <= 3, "derivative order must be in 0..3");
  return providers_[static_cast<std::size_t>(order)](t);
}

PeriodicCurve as_periodic(const CurveSampler& c) {
  auto p = c.positions();
  return PeriodicCurve(std::vector<Vec3>(p.begin(), p.end()), c.period());
}

CurveSampler band_limited(const PeriodicCurve& positions) {
  auto component = [&](int axis) {
    return std::make_shared<const TrigInterpolant>(map(positions, [axis](const Vec3& v) {
      return axis == 0 ? v.x : axis == 1 ? v.y : v.z;
    }));
  };
  auto fx = component(0);
  auto fy = component(1);
  auto fz = component(2);
  std::array<CurveSampler::Provider, 4> providers;
  for (int order = 0; order < 4; ++order) {
    providers[static_cast<std::size_t>(order)] = [fx, fy, fz, order](double t) {
      return Vec3{fx->derivative(t, order), fy->derivative(t, order), fz->derivative(t, order)};
    };
  }
  return CurveSampler::analytic(std::move(providers), positions.period(), positions.size(), true);
}

}  // namespace torsionkit
