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

#include "torsionkit/graph_curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace torsionkit {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr const char* kModule = "graph-curve";

void require_base_period(const PeriodicSamples& f) {
  if (std::abs(f.period() - kTwoPi) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, kModule, "kappa0 must be sampled over [0, 2 pi)");
  }
}

}  // namespace

double ClosureResidual::norm() const { return std::hypot(r_cos, r_sin); }

ClosureResidual closure_residuals(const PeriodicSamples& kappa0) {
  require_base_period(kappa0);
  ClosureResidual r;
  const double h = kappa0.spacing();
  for (std::size_t j = 0; j < kappa0.size(); ++j) {
    const double theta = kappa0.parameter(j);
    r.r_cos += std::cos(theta) / kappa0[j];
    r.r_sin += std::sin(theta) / kappa0[j];
  }
  r.r_cos *= h;
  r.r_sin *= h;
  return r;
}

BaseCurve base_from_kappa(const PeriodicSamples& kappa0, const BaseCurveOptions& options) {
  require_base_period(kappa0);
  for (std::size_t j = 0; j < kappa0.size(); ++j) {
    if (!(kappa0[j] > 0.0)) {
      throw Error(ErrorCode::NonPositiveCurvature, kModule,
                  "kappa0 <= 0 at theta = " + std::to_string(kappa0.parameter(j)));
    }
  }
  const ClosureResidual residual = closure_residuals(kappa0);
  if (!(std::abs(residual.r_cos) <= options.closure_tol && std::abs(residual.r_sin) <= options.closure_tol)) {
    throw Error(ErrorCode::NotClosed, kModule,
                "closure residuals (" + std::to_string(residual.r_cos) + ", " + std::to_string(residual.r_sin) +
                    ") exceed tolerance");
  }
  PeriodicSamples radius = map(kappa0, [](double k) { return 1.0 / k; });
  std::vector<Vec3> velocity(kappa0.size());
  for (std::size_t j = 0; j < velocity.size(); ++j) {
    const double theta = kappa0.parameter(j);
    velocity[j] = {radius[j] * std::cos(theta), radius[j] * std::sin(theta), 0.0};
  }
  auto gamma0 = spectral_antiderivative(PeriodicCurve(std::move(velocity), kTwoPi)).periodic;
  return BaseCurve(kappa0, std::move(radius), residual, std::move(gamma0));
}

HeightFunction::HeightFunction(PeriodicSamples h, int winding) : h_(std::move(h)), winding_(winding) {
  if (winding_ < 1) throw Error(ErrorCode::InvalidArgument, kModule, "winding number must be positive");
  if (std::abs(h_.period() - kTwoPi * winding_) > 1e-12 * winding_) {
    throw Error(ErrorCode::InvalidArgument, kModule, "height function must have period 2 pi k");
  }
  if (h_.size() % static_cast<std::size_t>(winding_) != 0) {
    throw Error(ErrorCode::InvalidArgument, kModule, "height sample count must be a multiple of k");
  }
}

HeightFunction HeightFunction::sample(const std::function<double(double)>& fn, int winding,
                                      std::size_t base_samples) {
  if (winding < 1) throw Error(ErrorCode::InvalidArgument, kModule, "winding number must be positive");
  return HeightFunction(PeriodicSamples::sample(fn, kTwoPi * winding, base_samples * static_cast<std::size_t>(winding)),
                        winding);
}

GraphCurve::Bracket GraphCurve::make_bracket(const BaseCurve& base, const HeightFunction& height) {
  const auto k = static_cast<std::size_t>(height.winding());
  if (height.h().size() != base.size() * k) {
    throw Error(ErrorCode::InvalidArgument, kModule,
                "height samples must be k times the base samples so the theta grids align");
  }
  const PeriodicSamples kappa = tile(base.kappa0(), k);
  const PeriodicSamples dh = spectral_derivative(height.h(), 1);
  std::vector<double> u(kappa.size());
  for (std::size_t j = 0; j < u.size(); ++j) u[j] = kappa[j] * dh[j];
  PeriodicSamples us(std::move(u), kappa.period());
  PeriodicSamples du = spectral_derivative(us, 1);
  PeriodicSamples ddu = spectral_derivative(us, 2);
  return Bracket{std::move(us), std::move(du), std::move(ddu)};
}

GraphCurve::GraphCurve(BaseCurve base, HeightFunction height, MetricSignature metric)
    : base_(std::move(base)), height_(std::move(height)), metric_(metric), bracket_(make_bracket(base_, height_)) {
  if (metric_ == MetricSignature::Lorentz21) {
    const auto w = weight();
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (!(std::abs(bracket_.u[j]) < 1.0) || !(w[j] < 0.0)) {
        throw Error(ErrorCode::NotSpacelike, kModule,
                    "graph is not spacelike with spacelike curvature vector at theta = " +
                        std::to_string(w.parameter(j)));
      }
    }
  }
}

PeriodicSamples GraphCurve::tiled(const PeriodicSamples& base_samples) const {
  return tile(base_samples, static_cast<std::size_t>(height_.winding()));
}

PeriodicSamples GraphCurve::weight() const {
  const double sign = metric_ == MetricSignature::Euclidean3 ? 1.0 : -1.0;
  std::vector<double> w(size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    w[j] = bracket_.du[j] * bracket_.du[j] + bracket_.u[j] * bracket_.u[j] + sign;
  }
  return PeriodicSamples(std::move(w), bracket_.u.period());
}

CurveSampler lift(const GraphCurve& g) {
  const BaseCurve& base = g.base();
  const PeriodicSamples& p = base.radius_of_curvature();
  const PeriodicSamples dp = g.tiled(spectral_derivative(p, 1));
  const PeriodicSamples ddp = g.tiled(spectral_derivative(p, 2));
  const PeriodicSamples pt = g.tiled(p);
  const PeriodicSamples& h = g.height().h();
  const PeriodicSamples dh = spectral_derivative(h, 1);
  const PeriodicSamples ddh = spectral_derivative(h, 2);
  const PeriodicSamples dddh = spectral_derivative(h, 3);

  const std::size_t n = g.size();
  const std::size_t nb = base.size();
  std::vector<Vec3> x(n), d1(n), d2(n), d3(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = h.parameter(j);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Vec3& q = base.gamma0()[j % nb];
    x[j] = {q.x, q.y, h[j]};
    // gamma0' = p (c, s); differentiate the product twice more.
    d1[j] = {pt[j] * c, pt[j] * s, dh[j]};
    d2[j] = {dp[j] * c - pt[j] * s, dp[j] * s + pt[j] * c, ddh[j]};
    d3[j] = {ddp[j] * c - 2.0 * dp[j] * s - pt[j] * c, ddp[j] * s + 2.0 * dp[j] * c - pt[j] * s, dddh[j]};
  }
  const double period = h.period();
  return CurveSampler::from_jet(std::move(x), PeriodicCurve(std::move(d1), period),
                                PeriodicCurve(std::move(d2), period), PeriodicCurve(std::move(d3), period), true);
}

PeriodicSamples graph_torsion(const GraphCurve& g) {
  const PeriodicSamples kappa = g.tiled(g.base().kappa0());
  const PeriodicSamples w = g.weight();
  const auto& b = g.bracket();
  std::vector<double> tau(g.size());
  for (std::size_t j = 0; j < tau.size(); ++j) {
    if (g.metric() == MetricSignature::Lorentz21 && !(w[j] < 0.0)) {
      throw Error(ErrorCode::NotSpacelike, kModule, "Lorentzian bracket is not negative");
    }
    tau[j] = kappa[j] * (b.ddu[j] + b.u[j]) / w[j];
  }
  return PeriodicSamples(std::move(tau), w.period());
}

bool SpacelikeFlags::all() const {
  return std::all_of(tangent.begin(), tangent.end(), [](bool b) { return b; }) &&
         std::all_of(curvature.begin(), curvature.end(), [](bool b) { return b; });
}

SpacelikeFlags spacelike_check(const CurveSampler& c) {
  constexpr auto L = MetricSignature::Lorentz21;
  const auto d1 = c.derivative(1);
  const auto d2 = c.derivative(2);
  SpacelikeFlags flags;
  flags.tangent.resize(c.size());
  flags.curvature.resize(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double s2 = metric_norm2(d1[j], L);
    flags.tangent[j] = s2 > 0.0;
    if (!flags.tangent[j]) {
      flags.curvature[j] = false;
      continue;
    }
    // d^2 gamma / ds^2 = (g'' - (<g',g''> / <g',g'>) g') / <g',g'>
    const Vec3 k = (d2[j] - (metric_dot(d1[j], d2[j], L) / s2) * d1[j]) / s2;
    flags.curvature[j] = metric_norm2(k, L) > 0.0;
  }
  return flags;
}

}  // namespace torsionkit
