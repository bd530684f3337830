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
#include <map>
#include <string>
#include <vector>

#include "torsionkit/curve_sampler.hpp"

namespace torsionkit {

using ParamMap = std::map<std::string, double>;

struct FamilyInfo {
  std::string name;
  std::vector<std::string> required;
  std::vector<std::string> optional;
  bool planar_closed;
  std::string description;
};

const std::vector<FamilyInfo>& registered_families();
const FamilyInfo* find_family(const std::string& name);

/// gamma0(t) = ((a+b) cos t - c cos((a+b)t/b), (a+b) sin t - c sin((a+b)t/b), 0)
/// on [0, 2 pi). Throws NonClosingParameters unless (a+b)/b is an integer.
CurveSampler family_trochoid(double a, double b, double c, std::size_t samples);

CurveSampler family_circle(double radius, std::size_t samples);
CurveSampler family_ellipse(double a, double b, std::size_t samples);
/// (a cos t, a sin t, b t) over one turn; an open arc.
CurveSampler family_helix(double a, double b, std::size_t samples);
/// ((R + rho cos mt) cos t, (R + rho cos mt) sin t, rho sin mt).
CurveSampler family_torus_coil(double big_r, double rho, double m, std::size_t samples);
/// (sin t, sin t cos t, 0).
CurveSampler family_figure_eight(std::size_t samples);
/// Plane curve beta_r.
CurveSampler family_beta(double r, std::size_t samples);

/// Builds the named family; throws UnknownFamily or InvalidArgument for
/// missing parameters. The `radius_of_curvature` family has no sampler (it is
/// given by its kappa0) and is rejected here.
CurveSampler make_family_curve(const std::string& family, const ParamMap& params, std::size_t samples);

}  // namespace torsionkit
