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

#include "torsionkit/families.hpp"

#include <cmath>
#include <numbers>

#include "torsionkit/constant_torsion.hpp"
#include "torsionkit/error.hpp"

namespace torsionkit {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr const char* kModule = "gallery-cli";

// d^k/dt^k of (cos wt, sin wt) scaled by amp.
Vec3 rotating(double amp, double w, double t, int order) {
  const double s = amp * std::pow(w, order);
  const double phase = w * t + order * std::numbers::pi / 2.0;
  return {s * std::cos(phase), s * std::sin(phase), 0.0};
}

double param(const ParamMap& params, const std::string& family, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw Error(ErrorCode::InvalidArgument, kModule, "family '" + family + "' needs parameter '" + key + "'");
  }
  return it->second;
}

}  // namespace

const std::vector<FamilyInfo>& registered_families() {
  static const std::vector<FamilyInfo> families = {
      {"circle", {"radius"}, {}, true, "circle of the given radius, counterclockwise"},
      {"ellipse", {"a", "b"}, {}, true, "(a cos t, b sin t)"},
      {"trochoid", {"a", "b", "c"}, {}, true, "hypotrochoid / epitrochoid roulette"},
      {"radius_of_curvature",
       {"p0"},
       {"a2", "b2", "a3", "b3", "a4", "b4", "a5", "b5"},
       true,
       "convex base given by 1/kappa0 = p0 + sum (a_m cos m theta + b_m sin m theta), m >= 2"},
      {"figure_eight", {}, {}, true, "(sin t, sin t cos t)"},
      {"beta", {"r"}, {"tau"}, true, "beta_r plane curve; koenigs lifts it to constant torsion tau (default r)"},
      {"helix", {"a", "b"}, {}, false, "(a cos t, a sin t, b t), one turn, open"},
      {"torus_coil", {"R", "rho", "m"}, {}, false, "coil wound m times around a torus; exploration only"},
  };
  return families;
}

const FamilyInfo* find_family(const std::string& name) {
  for (const auto& f : registered_families()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

CurveSampler family_trochoid(double a, double b, double c, std::size_t samples) {
  if (b == 0.0) throw Error(ErrorCode::NonClosingParameters, kModule, "trochoid needs b != 0");
  const double ratio = (a + b) / b;
  if (std::abs(ratio - std::round(ratio)) > 1e-12) {
    throw Error(ErrorCode::NonClosingParameters, kModule,
                "(a+b)/b = " + std::to_string(ratio) + " is not an integer; the curve does not close on [0, 2 pi)");
  }
  const double big = a + b;
  std::array<CurveSampler::Provider, 4> d;
  for (int order = 0; order < 4; ++order) {
    d[static_cast<std::size_t>(order)] = [=](double t) {
      return rotating(big, 1.0, t, order) - rotating(c, ratio, t, order);
    };
  }
  return CurveSampler::analytic(std::move(d), kTwoPi, samples, true);
}

CurveSampler family_circle(double radius, std::size_t samples) {
  std::array<CurveSampler::Provider, 4> d;
  for (int order = 0; order < 4; ++order) {
    d[static_cast<std::size_t>(order)] = [=](double t) { return rotating(radius, 1.0, t, order); };
  }
  return CurveSampler::analytic(std::move(d), kTwoPi, samples, true);
}

CurveSampler family_ellipse(double a, double b, std::size_t samples) {
  std::array<CurveSampler::Provider, 4> d;
  for (int order = 0; order < 4; ++order) {
    d[static_cast<std::size_t>(order)] = [=](double t) {
      const Vec3 u = rotating(1.0, 1.0, t, order);
      return Vec3{a * u.x, b * u.y, 0.0};
    };
  }
  return CurveSampler::analytic(std::move(d), kTwoPi, samples, true);
}

CurveSampler family_helix(double a, double b, std::size_t samples) {
  std::array<CurveSampler::Provider, 4> d;
  for (int order = 0; order < 4; ++order) {
    d[static_cast<std::size_t>(order)] = [=](double t) {
      Vec3 v = rotating(a, 1.0, t, order);
      v.z = order == 0 ? b * t : order == 1 ? b : 0.0;
      return v;
    };
  }
  return CurveSampler::analytic(std::move(d), kTwoPi, samples, false);
}

CurveSampler family_torus_coil(double big_r, double rho, double m, std::size_t samples) {
  // x + iy = (R + rho cos mt) e^{it} = R e^{it} + rho/2 (e^{i(m+1)t} + e^{-i(m-1)t})
  std::array<CurveSampler::Provider, 4> d;
  for (int order = 0; order < 4; ++order) {
    d[static_cast<std::size_t>(order)] = [=](double t) {
      Vec3 v = rotating(big_r, 1.0, t, order) + rotating(0.5 * rho, m + 1.0, t, order) +
               rotating(0.5 * rho, 1.0 - m, t, order);
      v.z = rotating(rho, m, t, order).y;
      return v;
    };
  }
  return CurveSampler::analytic(std::move(d), kTwoPi, samples, true);
}

CurveSampler family_figure_eight(std::size_t samples) {
  // (sin t, sin 2t / 2)
  std::array<CurveSampler::Provider, 4> d;
  for (int order = 0; order < 4; ++order) {
    d[static_cast<std::size_t>(order)] = [=](double t) {
      return Vec3{rotating(1.0, 1.0, t, order).y, rotating(0.5, 2.0, t, order).y, 0.0};
    };
  }
  return CurveSampler::analytic(std::move(d), kTwoPi, samples, true);
}

CurveSampler family_beta(double r, std::size_t samples) {
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorCode::InvalidArgument, kModule, "beta needs 0 < r <= 1");
  const double a = std::numbers::sqrt2 / 4.0;
  std::array<CurveSampler::Provider, 4> d;
  for (int order = 0; order < 4; ++order) {
    d[static_cast<std::size_t>(order)] = [=](double t) {
      return rotating(0.5 * r, 1.0, t, order) + rotating(a * r, -2.0, t, order);
    };
  }
  return CurveSampler::analytic(std::move(d), kTwoPi, samples, true);
}

CurveSampler make_family_curve(const std::string& family, const ParamMap& params, std::size_t samples) {
  if (family == "circle") return family_circle(param(params, family, "radius"), samples);
  if (family == "ellipse") return family_ellipse(param(params, family, "a"), param(params, family, "b"), samples);
  if (family == "trochoid") {
    return family_trochoid(param(params, family, "a"), param(params, family, "b"), param(params, family, "c"),
                           samples);
  }
  if (family == "figure_eight") return family_figure_eight(samples);
  if (family == "beta") return family_beta(param(params, family, "r"), samples);
  if (family == "helix") return family_helix(param(params, family, "a"), param(params, family, "b"), samples);
  if (family == "torus_coil") {
    return family_torus_coil(param(params, family, "R"), param(params, family, "rho"), param(params, family, "m"),
                             samples);
  }
  if (family == "radius_of_curvature") {
    throw Error(ErrorCode::InvalidArgument, kModule, "radius_of_curvature is defined by kappa0, not by a sampler");
  }
  throw Error(ErrorCode::UnknownFamily, kModule, "unknown family '" + family + "'");
}

}  // namespace torsionkit
