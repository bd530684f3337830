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

#include "torsionkit/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "torsionkit/constant_torsion.hpp"
#include "torsionkit/families.hpp"
#include "torsionkit/frenet.hpp"
#include "torsionkit/graph_curve.hpp"
#include "torsionkit/kernel.hpp"

namespace torsionkit {
namespace {


template <class Fn>
RunReport guarded(nlohmann::json spec, Fn&& body) {
  RunReport report;
  report.spec = std::move(spec);
  try {
    body(report);
  } catch (const Error& e) {
    report.samples.clear();
    report.summary.diagnostics.push_back(diagnostic_from(e));
  }
  return report;
}

std::optional<double> finite_or_empty(double v) {
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

std::vector<SampleRow> rows_from(const CurveSampler& c, const FrenetData& fr, std::span<const double> tau) {
  std::vector<SampleRow> rows(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Vec3 p = c.positions()[j];
    rows[j] = SampleRow{c.parameter(j), p.x, p.y, p.z, fr.kappa[j], finite_or_empty(tau[j]), std::nullopt};
  }
  return rows;
}

void summarize_torsion(RunSummary& s, std::span<const double> tau) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double t : tau) {
    if (!std::isfinite(t)) continue;
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  s.tau_min = finite_or_empty(lo);
  s.tau_max = finite_or_empty(hi);
}

CurveSampler plain_curve(const CurveSpec& spec) {
  if (spec.family == "radius_of_curvature") return CurveSampler::sampled(make_base(spec).gamma0());
  return make_family_curve(spec.family, spec.params, spec.samples);
}

struct GraphRun {
  GraphCurve g;
  CurveSampler lifted;
  FrenetData frenet;
  PeriodicSamples tau;
};

GraphRun graph_run(const CurveSpec& spec) {
  BaseCurve base = make_base(spec);
  HeightFunction h = make_height(spec, base);
  GraphCurve g(std::move(base), std::move(h), spec.metric);
  CurveSampler lifted = lift(g);
  FrenetData fr = frenet_apparatus(lifted, spec.metric);
  PeriodicSamples tau = graph_torsion(g);
  return GraphRun{std::move(g), std::move(lifted), std::move(fr), std::move(tau)};
}

}  // namespace

RunReport run_frenet(const CurveSpec& spec, const FrenetOptions& options) {
  return guarded(to_json(spec), [&](RunReport& r) {
    validate(spec);
    const CurveSampler c = plain_curve(spec);
    const FrenetData fr = frenet_apparatus(c, spec.metric, options);
    r.samples = rows_from(c, fr, fr.tau);
    summarize_torsion(r.summary, fr.tau);
    r.summary.kappa_min = fr.kappa_min();
    PeriodicSamples tau(fr.tau, c.period());
    if (c.closed() && fr.defined_count() == fr.size()) r.summary.sign_changes = sign_change_count(tau);
  });
}

RunReport run_graph_torsion(const CurveSpec& spec) {
  return guarded(to_json(spec), [&](RunReport& r) {
    validate(spec);
    const GraphRun run = graph_run(spec);
    std::vector<double> tau(run.tau.begin(), run.tau.end());
    r.samples = rows_from(run.lifted, run.frenet, tau);
    summarize_torsion(r.summary, tau);
    r.summary.kappa_min = run.frenet.kappa_min();
    r.summary.sign_changes = sign_change_count(run.tau);
  });
}

RunReport run_verify(const CurveSpec& spec, const IdentityOptions& options) {
  return guarded(to_json(spec), [&](RunReport& r) {
    validate(spec);
    const GraphRun run = graph_run(spec);
    const KernelSolution f = solve_kernel(run.g.base());
    const IdentityReport id = weighted_identity(run.g, f, options);
    std::vector<double> tau(run.tau.begin(), run.tau.end());
    r.samples = rows_from(run.lifted, run.frenet, tau);
    const PeriodicSamples ft = run.g.tiled(f.f);
    for (std::size_t j = 0; j < r.samples.size(); ++j) r.samples[j].f = ft[j];
    RunSummary& s = r.summary;
    s.identity_value = id.identity_value;
    s.verdict = std::string(to_string(id.verdict));
    s.sign_changes = id.sign_changes;
    s.ode_residual = f.ode_residual;
    s.min_f = f.min_f;
    s.tau_min = id.tau_min;
    s.tau_max = id.tau_max;
    s.kappa_min = run.frenet.kappa_min();
    if (!id.vanishes) {
      s.diagnostics.push_back({"kernel-theorem", "IdentityNotVanishing",
                               "weighted identity " + format_number(id.identity_value) + " exceeds tolerance against " +
                                   format_number(id.integrand_l1)});
    }
  });
}

RunReport run_kernel(const CurveSpec& spec) {
  return guarded(to_json(spec), [&](RunReport& r) {
    validate(spec);
    const BaseCurve base = make_base(spec);
    const KernelSolution f = solve_kernel(base);
    r.samples.resize(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) {
      const Vec3 p = base.gamma0()[j];
      r.samples[j] = SampleRow{base.kappa0().parameter(j), p.x, p.y, p.z, base.kappa0()[j], 0.0, f.f[j]};
    }
    r.summary.ode_residual = f.ode_residual;
    r.summary.min_f = f.min_f;
    r.summary.kappa_min = *std::min_element(base.kappa0().begin(), base.kappa0().end());
  });
}

RunReport run_koenigs(const CurveSpec& spec, const KoenigsOptions& options) {
  return guarded(to_json(spec), [&](RunReport& r) {
    validate(spec);
    if (spec.family != "beta") {
      throw Error(ErrorCode::InvalidArgument, "constant-torsion", "koenigs runs take the beta family");
    }
    if (spec.metric != MetricSignature::Euclidean3) {
      throw Error(ErrorCode::InvalidArgument, "constant-torsion", "the Koenigs construction is Euclidean");
    }
    const double radius = spec.params.at("r");
    const auto tau_it = spec.params.find("tau");
    const double tau = tau_it == spec.params.end() ? radius : tau_it->second;
    const KoenigsResult k = koenigs_curve(vertical_lift(beta_curve(radius, spec.samples)), tau, options);
    const FrenetData fr = frenet_apparatus(k.curve, MetricSignature::Euclidean3, options.frenet);
    std::vector<double> profile(k.tau_profile.begin(), k.tau_profile.end());
    r.samples = rows_from(k.curve, fr, profile);
    summarize_torsion(r.summary, profile);
    r.summary.closure_defect = k.closure_defect;
    r.summary.kappa_min = k.kappa_min;
    r.summary.verdict = norm(k.closure_defect) < options.closure_tol ? "Closed" : "Open";
  });
}

const std::vector<std::string>& counterexample_names() {
  static const std::vector<std::string> names = {"hypotrochoid_graph", "epitrochoid_graph"};
  return names;
}

CounterexampleInfo counterexample_info(const std::string& name) {
  if (name == "hypotrochoid_graph") return {1.0, -1.0 / 3.0, 1.0 / 6.0 + 0.05, 0.25, 3.0};
  if (name == "epitrochoid_graph") return {1.0, 0.2, 1.3 * 0.2, 1.0, 5.0};
  throw Error(ErrorCode::UnknownFamily, "gallery-cli", "unknown counterexample '" + name + "'");
}

CurveSampler counterexample_curve(const std::string& name, std::size_t samples) {
  const CounterexampleInfo info = counterexample_info(name);
  auto base = std::make_shared<CurveSampler>(family_trochoid(info.a, info.b, info.c, samples));
  std::array<CurveSampler::Provider, 4> jet;
  for (int order = 0; order < 4; ++order) {
    jet[static_cast<std::size_t>(order)] = [base, info, order](double t) {
      Vec3 p = base->evaluate(order, t);
      // d^n/dt^n sin(w t) = w^n sin(w t + n pi / 2)
      p.z = info.height_amp * std::pow(info.height_freq, order) *
            std::sin(info.height_freq * t + order * std::numbers::pi / 2.0);
      return p;
    };
  }
  return CurveSampler::analytic(jet, 2.0 * std::numbers::pi, samples, true);
}

std::optional<ErrorCode> counterexample_base_rejection(const std::string& name, std::size_t samples) {
  const CounterexampleInfo info = counterexample_info(name);
  try {
    base_from_plane_curve(family_trochoid(info.a, info.b, info.c, samples), samples);
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

RunReport run_counterexample(const std::string& name, std::size_t samples) {
  nlohmann::json spec = {{"counterexample", name}, {"samples", samples}};
  if (auto info = std::find(counterexample_names().begin(), counterexample_names().end(), name);
      info != counterexample_names().end()) {
    const CounterexampleInfo ci = counterexample_info(name);
    spec["trochoid"] = {{"a", ci.a}, {"b", ci.b}, {"c", ci.c}};
    spec["height"] = {{"type", "sine"}, {"params", {{"amp", ci.height_amp}, {"freq", ci.height_freq}}}};
  }
  return guarded(std::move(spec), [&](RunReport& r) {
    const CurveSampler c = counterexample_curve(name, samples);
    const FrenetData fr = frenet_apparatus(c, MetricSignature::Euclidean3);
    r.samples = rows_from(c, fr, fr.tau);
    summarize_torsion(r.summary, fr.tau);
    r.summary.kappa_min = fr.kappa_min();
    const bool defined = fr.defined_count() == fr.size();
    const bool positive = defined && fr.kappa_min() > 0.0 && fr.tau_min() > 0.0;
    r.summary.verdict = positive ? "PositiveTorsion" : "NotPositive";
    if (defined) r.summary.sign_changes = sign_change_count(PeriodicSamples(fr.tau, c.period()));
    const auto rejection = counterexample_base_rejection(name, samples);
    r.spec["base_rejected_as"] = rejection ? nlohmann::json(std::string(to_string(*rejection))) : nlohmann::json(nullptr);
  });
}

}  // namespace torsionkit
