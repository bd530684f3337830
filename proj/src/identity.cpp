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

#include "torsionkit/identity.hpp"

#include <algorithm>
#include <cmath>

namespace torsionkit {

std::string_view to_string(WeightSign s) {
  switch (s) {
    case WeightSign::AllPositive: return "AllPositive";
    case WeightSign::AllNegative: return "AllNegative";
    case WeightSign::Mixed: return "Mixed";
  }
  return "Mixed";
}

std::string_view to_string(TorsionVerdict v) {
  switch (v) {
    case TorsionVerdict::Planar: return "Planar";
    case TorsionVerdict::MixedSign: return "MixedSign";
    case TorsionVerdict::OneSigned: return "OneSigned";
  }
  return "OneSigned";
}

std::string_view to_string(TheoremVerdict v) {
  return v == TheoremVerdict::ConsistentWithTheorem ? "ConsistentWithTheorem" : "Violation";
}

int sign_change_count(const PeriodicSamples& tau) {
  double peak = 0.0;
  for (double v : tau) {
    if (std::isfinite(v)) peak = std::max(peak, std::abs(v));
  }
  const double band = 1e-9 * peak;
  const std::size_t n = tau.size();
  std::size_t start = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isfinite(tau[j]) && std::abs(tau[j]) > band) {
      start = j;
      break;
    }
  }
  if (start == n) return 0;
  int side = tau[start] > 0.0 ? 1 : -1;
  int changes = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    const double v = tau[(start + step) % n];
    if (!std::isfinite(v) || std::abs(v) <= band) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (s != side) {
      ++changes;
      side = s;
    }
  }
  return changes;
}

IdentityReport weighted_identity(const GraphCurve& g, const KernelSolution& f, const IdentityOptions& options) {
  const PeriodicSamples tau = graph_torsion(g);
  const PeriodicSamples w = g.weight();
  const PeriodicSamples kappa = g.tiled(g.base().kappa0());
  const PeriodicSamples ft = g.tiled(f.f);

  IdentityReport report;
  std::vector<double> integrand(tau.size());
  bool all_positive = true;
  bool all_negative = true;
  double peak = 0.0;
  report.tau_min = tau[0];
  report.tau_max = tau[0];
  for (std::size_t j = 0; j < tau.size(); ++j) {
    const double weight = w[j] * ft[j] / kappa[j];
    all_positive = all_positive && weight > 0.0;
    all_negative = all_negative && weight < 0.0;
    integrand[j] = tau[j] * weight;
    report.tau_min = std::min(report.tau_min, tau[j]);
    report.tau_max = std::max(report.tau_max, tau[j]);
    peak = std::max(peak, std::abs(tau[j]));
  }
  const PeriodicSamples integrand_samples(std::move(integrand), tau.period());
  report.identity_value = periodic_integral(integrand_samples);
  report.integrand_l1 = periodic_integral(map(integrand_samples, [](double v) { return std::abs(v); }));
  report.weight_sign = all_positive ? WeightSign::AllPositive : all_negative ? WeightSign::AllNegative : WeightSign::Mixed;
  report.sign_changes = sign_change_count(tau);
  report.planarity_tol = options.planarity_tol * (1.0 + options.reference_tau_scale);

  // A planar graph satisfies the identity trivially; its integrand is
  // roundoff, against which a relative test means nothing.
  report.vanishes = std::abs(report.identity_value) <= options.relative_tol * report.integrand_l1 ||
                    peak < report.planarity_tol;

  const double band = 1e-9 * peak;
  if (peak < report.planarity_tol) {
    report.verdict = TorsionVerdict::Planar;
  } else if (report.tau_min < -band && report.tau_max > band) {
    report.verdict = TorsionVerdict::MixedSign;
  } else {
    report.verdict = TorsionVerdict::OneSigned;
  }
  return report;
}

TheoremVerdict theorem_verdict(const IdentityReport& report) {
  const double tol = report.planarity_tol;
  const bool one_signed = report.tau_min >= -tol || report.tau_max <= tol;
  const double peak = std::max(std::abs(report.tau_min), std::abs(report.tau_max));
  return one_signed && peak >= tol ? TheoremVerdict::Violation : TheoremVerdict::ConsistentWithTheorem;
}

}  // namespace torsionkit
