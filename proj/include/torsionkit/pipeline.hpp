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
#include <optional>
#include <string>
#include <vector>

#include "torsionkit/constant_torsion.hpp"
#include "torsionkit/curve_spec.hpp"
#include "torsionkit/frenet.hpp"
#include "torsionkit/identity.hpp"
#include "torsionkit/report.hpp"

namespace torsionkit {

// Each run catches torsionkit::Error and records it as a diagnostic, so a
// report is always produced; RunReport::ok() tells whether it completed.

/// Frenet apparatus of the family curve itself (no height).
RunReport run_frenet(const CurveSpec& spec, const FrenetOptions& options = {});
/// Lift of the graph over the base; tau column from the closed-form graph torsion.
RunReport run_graph_torsion(const CurveSpec& spec);
/// base -> kernel -> graph torsion -> weighted identity -> verdict.
RunReport run_verify(const CurveSpec& spec, const IdentityOptions& options = {});
/// Kernel solution f over the base curve.
RunReport run_kernel(const CurveSpec& spec);
/// Constant-torsion curve from the vertical lift of beta_r. Family `beta`,
/// params r and optional tau (defaults to r).
RunReport run_koenigs(const CurveSpec& spec, const KoenigsOptions& options = {});

const std::vector<std::string>& counterexample_names();

struct CounterexampleInfo {
  double a, b, c;            // trochoid parameters
  double height_amp, height_freq;  // h(t) = amp sin(freq t)
};
/// Throws UnknownFamily for names outside counterexample_names().
CounterexampleInfo counterexample_info(const std::string& name);

/// Trochoid base lifted by its height, built analytically in the trochoid
/// parameter (the base is not convex or not simple, so the graph-curve
/// machinery does not apply).
CurveSampler counterexample_curve(const std::string& name, std::size_t samples);

/// The error base_from_plane_curve raises for the counterexample's base, if any.
std::optional<ErrorCode> counterexample_base_rejection(const std::string& name, std::size_t samples = kDefaultSamples);

/// verdict is "PositiveTorsion" when min kappa > 0 and min tau > 0, else
/// "NotPositive"; tau_min / kappa_min carry the margins.
RunReport run_counterexample(const std::string& name, std::size_t samples = kDefaultSamples);

}  // namespace torsionkit
