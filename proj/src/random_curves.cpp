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

#include "torsionkit/random_curves.hpp"

#include <cmath>
#include <numbers>

#include "torsionkit/error.hpp"

namespace torsionkit::random_curves {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> coefficients(Rng& rng, std::size_t count, double total) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(count);
  double sum = 0.0;
  for (double& v : c) {
    v = u(rng);
    sum += std::abs(v);
  }
  for (double& v : c) v *= total / sum;
  return c;
}

}  // namespace

PeriodicSamples convex_kappa(Rng& rng, std::size_t samples) {
  std::uniform_real_distribution<double> budget(0.05, 0.8);
  const auto c = coefficients(rng, 8, budget(rng));
  return PeriodicSamples::sample(
      [&](double theta) {
        double p = 1.0;
        for (int m = 2; m <= 5; ++m) {
          const std::size_t k = static_cast<std::size_t>(2 * (m - 2));
          p += c[k] * std::cos(m * theta) + c[k + 1] * std::sin(m * theta);
        }
        return 1.0 / p;
      },
      kTwoPi, samples);
}

HeightFunction height(Rng& rng, int winding, std::size_t base_samples, double amplitude) {
  const std::size_t modes = 4 * static_cast<std::size_t>(winding);
  const auto c = coefficients(rng, 2 * modes, amplitude);
  return HeightFunction::sample(
      [&](double theta) {
        double h = 0.0;
        for (std::size_t j = 1; j <= modes; ++j) {
          const double w = static_cast<double>(j) / winding;
          h += c[2 * (j - 1)] * std::cos(w * theta) + c[2 * (j - 1) + 1] * std::sin(w * theta);
        }
        return h;
      },
      winding, base_samples);
}

HeightFunction planar_height(Rng& rng, const BaseCurve& base, int winding, double slope) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double a = slope * u(rng);
  const double b = slope * u(rng);
  const double c = u(rng);
  const auto& g = base.gamma0();
  std::vector<double> h(g.size());
  for (std::size_t j = 0; j < h.size(); ++j) h[j] = a * g[j].x + b * g[j].y + c;
  return HeightFunction(tile(PeriodicSamples(std::move(h), kTwoPi), static_cast<std::size_t>(winding)), winding);
}

GraphCurve graph(Rng& rng, MetricSignature metric, int winding, std::size_t base_samples) {
  BaseCurve base = base_from_kappa(convex_kappa(rng, base_samples));
  std::uniform_real_distribution<double> amp(0.1, 1.5);
  double amplitude = amp(rng);
  const Rng::result_type seed = rng();
  for (;;) {
    Rng local(seed);
    HeightFunction h = height(local, winding, base_samples, amplitude);
    try {
      return GraphCurve(base, std::move(h), metric);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotSpacelike) throw;
      amplitude *= 0.5;
    }
  }
}

CurveSampler closed_space_curve(Rng& rng, std::size_t samples) {
  std::normal_distribution<double> n01(0.0, 1.0);
  double c[3][4][2];
  for (auto& axis : c) {
    for (int m = 0; m < 4; ++m) {
      axis[m][0] = n01(rng) / (m + 1);
      axis[m][1] = n01(rng) / (m + 1);
    }
  }
  return CurveSampler::sampled(PeriodicCurve::sample(
      [&](double t) {
        double v[3] = {0.0, 0.0, 0.0};
        for (int a = 0; a < 3; ++a) {
          for (int m = 0; m < 4; ++m) v[a] += c[a][m][0] * std::cos((m + 1) * t) + c[a][m][1] * std::sin((m + 1) * t);
        }
        return Vec3{v[0], v[1], v[2]};
      },
      kTwoPi, samples));
}

}  // namespace torsionkit::random_curves
