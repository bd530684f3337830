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

#include "torsionkit/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "torsionkit/constant_torsion.hpp"
#include "torsionkit/families.hpp"
#include "torsionkit/frenet.hpp"
#include "torsionkit/graph_curve.hpp"
#include "torsionkit/identity.hpp"
#include "torsionkit/kernel.hpp"
#include "torsionkit/pipeline.hpp"
#include "torsionkit/random_curves.hpp"

namespace torsionkit {
namespace {

constexpr std::size_t kN = kDefaultSamples;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double sup_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

// Graph curves shared by the identity and contrapositive criteria.
struct GraphCase {
  GraphCurve g;
  std::string label;
};

std::vector<GraphCase> identity_cases() {
  random_curves::Rng rng(0x5eed0002);
  std::vector<GraphCase> out;
  for (int i = 0; i < 50; ++i) {
    out.push_back({random_curves::graph(rng, MetricSignature::Euclidean3, 1, kN), fmt("euclidean #%d", i)});
  }
  for (int i = 0; i < 20; ++i) {
    out.push_back({random_curves::graph(rng, MetricSignature::Lorentz21, 1, kN), fmt("lorentz #%d", i)});
  }
  for (int i = 0; i < 10; ++i) {
    const int k = 2 + i % 2;
    const auto m = i < 6 ? MetricSignature::Euclidean3 : MetricSignature::Lorentz21;
    out.push_back({random_curves::graph(rng, m, k, kN), fmt("winding k=%d #%d", k, i)});
  }
  return out;
}

CriterionResult kernel_criterion() {
  CriterionResult r{1, "kernel solution", true, ""};
  const BaseCurve circle = base_from_kappa(PeriodicSamples(std::vector<double>(kN, 1.0), kTwoPi));
  const KernelSolution one = solve_kernel(circle);
  double dev = 0.0;
  for (double v : one.f) dev = std::max(dev, std::abs(v - 1.0));
  r.passed = dev < 1e-10;

  random_curves::Rng rng(0x5eed0001);
  double worst_ode = 0.0, worst_oracle = 0.0, least_f = INFINITY;
  for (int i = 0; i < 50; ++i) {
    const KernelSolution s = solve_kernel(base_from_kappa(random_curves::convex_kappa(rng, kN)));
    worst_ode = std::max(worst_ode, s.ode_residual);
    worst_oracle = std::max(worst_oracle, s.oracle_deviation);
    least_f = std::min(least_f, s.min_f);
  }
  r.passed = r.passed && worst_ode < 1e-8 && least_f > 0.0 && worst_oracle < 1e-6;
  r.detail = fmt("|f-1| = %.2e on the circle; 50 bases: ode residual %.2e, min f %.3f, oracle deviation %.2e", dev,
                 worst_ode, least_f, worst_oracle);
  return r;
}

CriterionResult identity_criterion(const std::vector<GraphCase>& cases) {
  CriterionResult r{2, "weighted total-torsion identity", true, ""};
  double worst = 0.0;
  std::string where;
  int lorentz_spacelike = 0;
  for (const auto& c : cases) {
    if (c.g.metric() == MetricSignature::Lorentz21) {
      if (!spacelike_check(lift(c.g)).all()) {
        r.passed = false;
        where = c.label + " failed spacelike_check";
        continue;
      }
      ++lorentz_spacelike;
    }
    const IdentityReport id = weighted_identity(c.g, solve_kernel(c.g.base()));
    const double rel = std::abs(id.identity_value) / id.integrand_l1;
    if (!(std::abs(id.identity_value) <= 1e-8 * id.integrand_l1)) {
      r.passed = false;
      where = c.label;
    }
    if (rel > worst) worst = rel;
  }
  r.detail = fmt("%zu curves (%d spacelike Lorentzian); worst |I| / int|integrand| = %.2e", cases.size(),
                 lorentz_spacelike, worst);
  if (!where.empty()) r.detail += "; failed at " + where;
  return r;
}

CriterionResult contrapositive_criterion(const std::vector<GraphCase>& cases) {
  CriterionResult r{3, "torsion changes sign on graph curves", true, ""};
  random_curves::Rng rng(0x5eed0003);
  std::vector<GraphCase> all = cases;
  for (int i = 0; i < 10; ++i) {
    BaseCurve base = base_from_kappa(random_curves::convex_kappa(rng, kN));
    HeightFunction h = random_curves::planar_height(rng, base, 1, 0.5);
    const auto m = i % 2 ? MetricSignature::Lorentz21 : MetricSignature::Euclidean3;
    all.push_back({GraphCurve(std::move(base), std::move(h), m), fmt("planar #%d", i)});
  }
  int flat = 0, least_changes = 1 << 30;
  for (const auto& c : all) {
    const PeriodicSamples tau = graph_torsion(c.g);
    if (max_abs(tau) < 1e-6) {
      ++flat;
      continue;
    }
    const int changes = sign_change_count(tau);
    least_changes = std::min(least_changes, changes);
    if (changes < 4) {
      r.passed = false;
      r.detail += c.label + fmt(" has %d sign changes; ", changes);
    }
  }
  r.detail += fmt("%zu curves, %d with max|tau| < 1e-6, fewest sign changes otherwise %d", all.size(), flat,
                  least_changes);
  return r;
}

CriterionResult counterexample_criterion() {
  CriterionResult r{4, "trochoid counterexamples have positive torsion", true, ""};
  for (const auto& name : counterexample_names()) {
    const FrenetData coarse = frenet_apparatus(counterexample_curve(name, kN), MetricSignature::Euclidean3);
    const FrenetData fine = frenet_apparatus(counterexample_curve(name, 2 * kN), MetricSignature::Euclidean3);
    const bool defined = coarse.defined_count() == coarse.size();
    const double drift = std::abs(coarse.tau_min() - fine.tau_min()) / std::abs(fine.tau_min());
    const bool ok = defined && coarse.kappa_min() > 0.0 && coarse.tau_min() > 0.0 && drift < 0.01;
    r.passed = r.passed && ok;
    r.detail += fmt("%s: min kappa %.4f, min tau %.6f (N=%zu) vs %.6f (N=%zu); ", name.c_str(), coarse.kappa_min(),
                    coarse.tau_min(), kN, fine.tau_min(), 2 * kN);
  }
  r.detail.resize(r.detail.size() - 2);
  return r;
}

CriterionResult hypothesis_criterion() {
  CriterionResult r{5, "base hypotheses enforced", true, ""};
  const auto hypo = counterexample_base_rejection("hypotrochoid_graph");
  const auto epi = counterexample_base_rejection("epitrochoid_graph");
  r.passed = hypo == ErrorCode::NonConvex && epi == ErrorCode::NotSimple;
  auto name = [](const std::optional<ErrorCode>& c) { return c ? std::string(to_string(*c)) : std::string("accepted"); };
  r.detail = "hypotrochoid base: " + name(hypo) + ", epitrochoid base: " + name(epi);
  return r;
}

CriterionResult koenigs_criterion() {
  CriterionResult r{6, "constant-torsion closed curves", true, ""};
  for (double radius : {1.0, 0.5, 0.25}) {
    const KoenigsResult k = koenigs_curve(vertical_lift(beta_curve(radius, kN)), radius);
    const double defect = norm(k.closure_defect);
    const bool ok = defect < 1e-6 && k.tau_stdev < 1e-6 && k.orientation_consistent && k.binormal_deviation < 1e-6 &&
                    k.kappa_min > 0.0;
    r.passed = r.passed && ok;
    r.detail += fmt("r=%g: defect %.1e, tau stdev %.1e, binormal %+d dev %.1e, min kappa %.3f; ", radius, defect,
                    k.tau_stdev, k.binormal_orientation, k.binormal_deviation, k.kappa_min);
  }
  r.detail.resize(r.detail.size() - 2);
  return r;
}

CriterionResult signed_area_criterion() {
  CriterionResult r{7, "signed area and vertical closure", true, ""};
  double worst_area = 0.0, worst_link = 0.0;
  for (double radius : {1.0, 0.5, 0.25}) {
    const BetaCurve beta = beta_curve(radius, kN);
    const double area = signed_area(family_beta(radius, kN));
    worst_area = std::max(worst_area, std::abs(area));
    const KoenigsResult k = koenigs_curve(vertical_lift(beta), radius);
    worst_link = std::max(worst_link, std::abs(k.closure_defect.z - signed_area(beta.samples) / radius));
  }
  // Control with nonzero area: an off-centre ellipse inside the unit disk.
  const double tau = 0.5;
  const PeriodicCurve ellipse = PeriodicCurve::sample(
      [](double t) { return Vec3{0.1 + 0.5 * std::cos(t), 0.05 + 0.3 * std::sin(t), 0.0}; }, kTwoPi, kN);
  const double area = signed_area(ellipse);
  const KoenigsResult k = koenigs_curve(vertical_lift(ellipse), tau);
  const double control = std::abs(k.closure_defect.z - area / tau);
  r.passed = worst_area < 1e-10 && worst_link < 1e-10 && control < 1e-10 * std::abs(area / tau) && std::abs(area) > 0.1;
  r.detail = fmt("beta area %.1e, |defect_z - area/r| %.1e; ellipse control area %.6f, mismatch %.1e", worst_area,
                 worst_link, area, control);
  return r;
}

CriterionResult rigidity_criterion() {
  CriterionResult r{8, "binormal spread shrinks with r; projection loses embedding", true, ""};
  std::vector<double> spread;
  double self_distance = 0.0;
  for (double radius : {1.0, 0.5, 0.25, 0.125}) {
    const KoenigsResult k = koenigs_curve(vertical_lift(beta_curve(radius, kN)), radius);
    spread.push_back(binormal_spread(k.curve));
    if (radius == 0.125) {
      std::vector<Vec3> flat(k.curve.positions().begin(), k.curve.positions().end());
      for (Vec3& p : flat) p.z = 0.0;
      self_distance = min_self_distance(CurveSampler::sampled(PeriodicCurve(std::move(flat), k.curve.period())));
    }
  }
  for (std::size_t i = 1; i < spread.size(); ++i) r.passed = r.passed && spread[i] < spread[i - 1];
  r.passed = r.passed && self_distance < 1e-2;
  r.detail = fmt("spread %.4f > %.4f > %.4f > %.4f; min self distance of the r=1/8 projection %.2e", spread[0],
                 spread[1], spread[2], spread[3], self_distance);
  return r;
}

CriterionResult metric_invariance_criterion() {
  CriterionResult r{9, "torsion sign numerator is metric independent", true, ""};
  random_curves::Rng rng(0x5eed0009);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const CurveSampler c = random_curves::closed_space_curve(rng, kN);
    worst = std::max(worst, sup_diff(torsion_sign_numerator(c, MetricSignature::Euclidean3).values(),
                                     torsion_sign_numerator(c, MetricSignature::Lorentz21).values()));
  }
  r.passed = worst <= 1e-12;
  r.detail = fmt("20 curves, worst difference %.2e", worst);
  return r;
}

CriterionResult cross_validation_criterion() {
  CriterionResult r{10, "graph torsion matches the lifted Frenet torsion", true, ""};
  random_curves::Rng rng(0x5eed0010);
  double worst = 0.0;
  for (auto m : {MetricSignature::Euclidean3, MetricSignature::Lorentz21}) {
    for (int i = 0; i < 50; ++i) {
      const GraphCurve g = random_curves::graph(rng, m, 1, kN);
      const FrenetData fr = frenet_apparatus(lift(g), m);
      const PeriodicSamples tau = graph_torsion(g);
      if (fr.defined_count() != fr.size()) {
        r.passed = false;
        continue;
      }
      worst = std::max(worst, sup_diff(fr.tau, tau.values()));
    }
  }
  double helix = 0.0;
  for (auto [a, b] : {std::pair{1.0, 1.0}, {2.0, 1.0}, {1.0, 3.0}}) {
    const FrenetData fr = frenet_apparatus(family_helix(a, b, kN), MetricSignature::Euclidean3);
    for (double t : fr.tau) helix = std::max(helix, std::abs(t - b / (a * a + b * b)));
  }
  r.passed = r.passed && worst < 1e-6 && helix < 1e-9;
  r.detail = fmt("100 graph curves, worst |tau_graph - tau_frenet| %.2e; helix error %.2e", worst, helix);
  return r;
}

CriterionResult guarded(int id, const char* title, const std::function<CriterionResult()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {id, title, false, std::string("threw: ") + e.what()};
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  out.push_back(guarded(1, "kernel solution", kernel_criterion));
  std::vector<GraphCase> cases;
  try {
    cases = identity_cases();
  } catch (const std::exception& e) {
    out.push_back({2, "weighted total-torsion identity", false, std::string("threw: ") + e.what()});
    out.push_back({3, "torsion changes sign on graph curves", false, std::string("threw: ") + e.what()});
  }
  if (!cases.empty()) {
    out.push_back(guarded(2, "weighted total-torsion identity", [&] { return identity_criterion(cases); }));
    out.push_back(guarded(3, "torsion changes sign on graph curves", [&] { return contrapositive_criterion(cases); }));
  }
  out.push_back(guarded(4, "trochoid counterexamples have positive torsion", counterexample_criterion));
  out.push_back(guarded(5, "base hypotheses enforced", hypothesis_criterion));
  out.push_back(guarded(6, "constant-torsion closed curves", koenigs_criterion));
  out.push_back(guarded(7, "signed area and vertical closure", signed_area_criterion));
  out.push_back(guarded(8, "binormal spread shrinks with r; projection loses embedding", rigidity_criterion));
  out.push_back(guarded(9, "torsion sign numerator is metric independent", metric_invariance_criterion));
  out.push_back(guarded(10, "graph torsion matches the lifted Frenet torsion", cross_validation_criterion));
  return out;
}

std::string format_result(const CriterionResult& r) {
  return fmt("%s [%d] %s: %s", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str());
}

}  // namespace torsionkit
