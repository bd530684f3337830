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

#include <string_view>

#include "torsionkit/graph_curve.hpp"
#include "torsionkit/kernel.hpp"
#include "torsionkit/periodic.hpp"

namespace torsionkit {

enum class WeightSign { AllPositive, AllNegative, Mixed };
/// OneSigned should never occur on valid input; it is what a Violation
/// verdict is made of.
enum class TorsionVerdict { Planar, MixedSign, OneSigned };
enum class TheoremVerdict { ConsistentWithTheorem, Violation };

std::string_view to_string(WeightSign s);
std::string_view to_string(TorsionVerdict v);
std::string_view to_string(TheoremVerdict v);

struct IdentityOptions {
  /// |identity| <= relative_tol * int |integrand| counts as vanishing.
  double relative_tol = 1e-8;
  /// Planar when max |tau| < planarity_tol * (1 + reference_tau_scale).
  double planarity_tol = 1e-6;
  double reference_tau_scale = 0.0;
};

/// Weighted total torsion int tau W f / kappa0 d theta over [0, 2 pi k),
/// W = (u')^2 + u^2 +- 1, together with the sign structure of tau.
struct IdentityReport {
  double identity_value = 0.0;
  double integrand_l1 = 0.0;
  bool vanishes = false;  // within relative_tol of the L1 norm, or the graph is planar
  WeightSign weight_sign = WeightSign::Mixed;
  double tau_min = 0.0;
  double tau_max = 0.0;
  int sign_changes = 0;
  TorsionVerdict verdict = TorsionVerdict::Planar;
  double planarity_tol = 1e-6;
};

IdentityReport weighted_identity(const GraphCurve& g, const KernelSolution& f, const IdentityOptions& options = {});

/// Contrapositive check: torsion that is one-signed (within the planarity
/// tolerance) must also be below that tolerance in magnitude.
TheoremVerdict theorem_verdict(const IdentityReport& report);

/// Sign changes of tau around the period, with hysteresis: a change counts
/// only once tau leaves the band [-eps, eps], eps = 1e-9 max |tau|, on the
/// side opposite to its previous excursion. NaN samples are skipped.
int sign_change_count(const PeriodicSamples& tau);

}  // namespace torsionkit
