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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ranges>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "torsionkit/curve_spec.hpp"
#include "torsionkit/families.hpp"
#include "torsionkit/frenet.hpp"
#include "torsionkit/pipeline.hpp"
#include "torsionkit/report.hpp"

using namespace torsionkit;
using nlohmann::json;
using oracle::kTwoPi;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

CurveSpec spec_of(const json& j) { return parse_curve_spec(j); }

json circle_spec(json height, const char* metric = "euclidean", int winding = 1) {
  return {{"family", "circle"}, {"params", {{"radius", 1}}}, {"height", height},
          {"metric", metric},   {"samples", 1024},            {"winding", winding}};
}

json sine(double amp, double freq) { return {{"type", "sine"}, {"params", {{"amp", amp}, {"freq", freq}}}}; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string column(const std::string& row, int index) {
  std::istringstream in(row);
  std::string cell;
  for (int i = 0; i <= index; ++i) std::getline(in, cell, ',');
  return cell;
}

// Trochoid jet in closed form, independent of the registry.
oracle::V3 trochoid_d(double a, double b, double c, int order, double t) {
  const double w = (a + b) / b;
  auto term = [&](double amp, double f) {
    // d^n/dt^n (cos f t, sin f t) = f^n (cos(f t + n pi/2), sin(f t + n pi/2))
    const double k = std::pow(f, order), ph = f * t + order * oracle::kPi / 2;
    return std::array<double, 2>{amp * k * std::cos(ph), amp * k * std::sin(ph)};
  };
  const auto p = term(a + b, 1.0), q = term(c, w);
  return {p[0] - q[0], p[1] - q[1], 0.0};
}

}  // namespace

TEST_CASE("trochoid family") {
  CHECK(code_of([] { family_trochoid(1, 0.3, 0.1, 256); }) == ErrorCode::NonClosingParameters);
  CHECK(code_of([] { family_trochoid(1, 0, 0.1, 256); }) == ErrorCode::NonClosingParameters);
  const CurveSampler circle = family_trochoid(1, -1.0 / 3, 0, 256);
  for (const Vec3& p : circle.positions()) CHECK(norm(p) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  const FrenetData fr = frenet_apparatus(circle, MetricSignature::Euclidean3);
  CHECK(fr.kappa_min() == doctest::Approx(1.5).epsilon(1e-12));

  for (auto [a, b, c] : {std::tuple{1.0, -1.0 / 3, 1.0 / 6 + 0.05}, {1.0, 0.2, 0.26}}) {
    const CurveSampler t = family_trochoid(a, b, c, 512);
    for (int order = 0; order <= 3; ++order) {
      for (std::size_t j = 0; j < t.size(); j += 13) {
        const auto e = trochoid_d(a, b, c, order, t.parameter(j));
        CHECK(norm(t.derivative(order)[j] - Vec3{e[0], e[1], e[2]}) < 1e-12);
      }
    }
  }
}

TEST_CASE("family registry") {
  std::set<std::string> names;
  for (const auto& f : registered_families()) names.insert(f.name);
  for (const char* n : {"circle", "ellipse", "trochoid", "radius_of_curvature", "figure_eight", "beta", "helix",
                        "torus_coil"}) {
    CHECK(names.count(n) == 1);
  }
  CHECK(find_family("nope") == nullptr);
  CHECK(code_of([] { make_family_curve("nope", {}, 256); }) == ErrorCode::UnknownFamily);
  CHECK(code_of([] { make_family_curve("ellipse", {{"a", 1}}, 256); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_family_curve("radius_of_curvature", {{"p0", 1}}, 256); }) == ErrorCode::InvalidArgument);
  const CurveSampler h = make_family_curve("helix", {{"a", 1}, {"b", 2}}, 256);
  CHECK_FALSE(h.closed());
  CHECK(h.positions()[1].z == doctest::Approx(2 * kTwoPi / 256));
}

TEST_CASE("curve spec parsing and validation") {
  const CurveSpec s = spec_of(circle_spec(sine(0.25, 3)));
  CHECK(s.family == "circle");
  CHECK(s.samples == 1024);
  CHECK(s.height->params.at("freq") == 3);
  CHECK(to_json(s)["metric"] == "euclidean");
  CHECK(spec_of(to_json(s)).params == s.params);

  CHECK(code_of([] { spec_of({{"family", "nope"}}); }) == ErrorCode::UnknownFamily);
  CHECK(code_of([] { spec_of({{"family", "ellipse"}, {"params", {{"a", 1}}}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { spec_of({{"family", "circle"}, {"params", {{"radius", 1}, {"b", 2}}}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { spec_of({{"family", "circle"}, {"params", {{"radius", 1}}}, {"samples", 1000}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { spec_of({{"family", "circle"}, {"params", {{"radius", 1}}}, {"samples", 128}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { spec_of({{"family", "circle"}, {"params", {{"radius", 1}}}, {"winding", 0}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { spec_of({{"family", "circle"}, {"params", {{"radius", 1}}}, {"metric", "minkowski"}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { spec_of({{"family", "circle"}, {"params", {{"radius", 1}}}, {"colour", "red"}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { spec_of(json::array()); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("verify: circle with h = 1/4 sin 3 theta") {
  const RunReport r = run_verify(spec_of(circle_spec(sine(0.25, 3))));
  REQUIRE(r.ok());
  CHECK(std::abs(*r.summary.identity_value) < 1e-10);
  CHECK(*r.summary.sign_changes >= 4);
  CHECK(*r.summary.verdict == "MixedSign");
  CHECK(*r.summary.min_f > 0);
  CHECK(r.samples.size() == 1024);
  for (const auto& row : r.samples) CHECK(row.f.has_value());
}

TEST_CASE("verify: flat heights are planar in either metric") {
  for (const char* m : {"euclidean", "lorentz"}) {
    const RunReport r = run_verify(spec_of(circle_spec({{"type", "zero"}}, m)));
    REQUIRE(r.ok());
    CHECK(*r.summary.verdict == "Planar");
    CHECK(*r.summary.identity_value == 0.0);
  }
  const RunReport tilted = run_verify(spec_of(
      {{"family", "ellipse"}, {"params", {{"a", 2}, {"b", 1}}}, {"height", {{"type", "plane"}, {"params", {{"a", 0.3}, {"b", -0.2}, {"c", 1}}}}}}));
  REQUIRE(tilted.ok());
  CHECK(*tilted.summary.verdict == "Planar");
}

TEST_CASE("verify: winding k = 3, h = 0.2 sin(theta / 3)") {
  const RunReport r = run_verify(spec_of(circle_spec(sine(0.2, 1.0 / 3), "euclidean", 3)));
  REQUIRE(r.ok());
  CHECK(r.samples.size() == 3 * 1024);
  CHECK(r.samples.back().t == doctest::Approx(3 * kTwoPi * (3 * 1024 - 1) / (3 * 1024)));
  CHECK(std::abs(*r.summary.identity_value) < 1e-10);
  CHECK(*r.summary.verdict == "MixedSign");
}

TEST_CASE("verify on other bases") {
  const RunReport ellipse = run_verify(spec_of(
      {{"family", "ellipse"}, {"params", {{"a", 2}, {"b", 1}}}, {"height", sine(0.1, 2)}, {"metric", "lorentz"}}));
  REQUIRE(ellipse.ok());
  CHECK(*ellipse.summary.sign_changes >= 4);
  const RunReport roc = run_verify(spec_of({{"family", "radius_of_curvature"},
                                            {"params", {{"p0", 1}, {"a2", 0.3}, {"b3", -0.2}}},
                                            {"height", sine(0.5, 1)}}));
  REQUIRE(roc.ok());
  CHECK(*roc.summary.sign_changes >= 4);
}

TEST_CASE("pipeline errors become diagnostics with provenance") {
  const RunReport bad = run_verify(spec_of(
      {{"family", "trochoid"}, {"params", {{"a", 1}, {"b", -1.0 / 3}, {"c", 1.0 / 6 + 0.05}}}, {"height", sine(0.25, 3)}}));
  CHECK_FALSE(bad.ok());
  CHECK(bad.samples.empty());
  REQUIRE(bad.summary.diagnostics.size() == 1);
  CHECK(bad.summary.diagnostics[0].code == "NonConvex");
  CHECK(bad.summary.diagnostics[0].module == "graph-curve");

  const RunReport steep = run_verify(spec_of(circle_spec(sine(2.0, 1), "lorentz")));
  CHECK(steep.summary.diagnostics.at(0).code == "NotSpacelike");
  const RunReport fractional = run_verify(spec_of(circle_spec(sine(0.2, 0.5))));
  CHECK(fractional.summary.diagnostics.at(0).code == "InvalidArgument");
  const RunReport open = run_verify(spec_of({{"family", "helix"}, {"params", {{"a", 1}, {"b", 1}}}}));
  CHECK_FALSE(open.ok());
}

TEST_CASE("counterexamples: positive torsion over bases that break the hypotheses") {
  for (const auto& name : counterexample_names()) {
    const RunReport r = run_counterexample(name);
    REQUIRE(r.ok());
    CHECK(*r.summary.verdict == "PositiveTorsion");
    CHECK(*r.summary.tau_min > 0);
    CHECK(*r.summary.kappa_min > 0);
    CHECK(*r.summary.sign_changes == 0);
  }
  CHECK(run_counterexample("hypotrochoid_graph").spec["base_rejected_as"] == "NonConvex");
  CHECK(run_counterexample("epitrochoid_graph").spec["base_rejected_as"] == "NotSimple");
  CHECK(counterexample_base_rejection("hypotrochoid_graph") == ErrorCode::NonConvex);
  CHECK(run_counterexample("nope").summary.diagnostics.at(0).code == "UnknownFamily");
}

TEST_CASE("counterexample torsion against the closed-form trochoid jet") {
  for (const auto& name : counterexample_names()) {
    const CounterexampleInfo ci = counterexample_info(name);
    const RunReport r = run_counterexample(name, 1024);
    double tmin = INFINITY;
    for (const auto& row : r.samples) {
      auto d = [&](int order) {
        auto v = trochoid_d(ci.a, ci.b, ci.c, order, row.t);
        const double w = ci.height_freq;
        v[2] = ci.height_amp * std::pow(w, order) * std::sin(w * row.t + order * oracle::kPi / 2);
        return v;
      };
      const double expect = oracle::torsion(d(1), d(2), d(3));
      CHECK(*row.tau == doctest::Approx(expect).epsilon(1e-10));
      tmin = std::min(tmin, expect);
    }
    CHECK(*r.summary.tau_min == doctest::Approx(tmin).epsilon(1e-12));
    CHECK(tmin > 0);
  }
}

TEST_CASE("CSV output") {
  const RunReport circle = run_frenet(spec_of({{"family", "circle"}, {"params", {{"radius", 1}}}, {"samples", 256}}));
  const auto rows = lines(to_csv(circle));
  CHECK(rows.at(0) == "t,x,y,z,kappa,tau");
  CHECK(rows.size() == 257);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(column(rows[i], 5) == "0");

  const RunReport helix = run_frenet(spec_of({{"family", "helix"}, {"params", {{"a", 1}, {"b", 1}}}, {"samples", 256}}));
  const auto hr = lines(to_csv(helix));
  for (const auto& row : hr | std::views::drop(1)) {
    CHECK(std::stod(column(row, 5)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::stod(column(row, 4)) == doctest::Approx(0.5).epsilon(1e-14));
  }

  // The figure-eight has inflections at t = 0 and pi: torsion undefined there.
  const RunReport eight = run_frenet(spec_of({{"family", "figure_eight"}, {"samples", 256}}));
  const auto er = lines(to_csv(eight));
  CHECK(column(er.at(1), 5) == "NA");
  CHECK(column(er.at(1 + 128), 5) == "NA");
  CHECK(column(er.at(2), 5) == "0");

  // Every table value is a finite number or NA; identical runs give identical bytes.
  const json cfg = circle_spec(sine(0.25, 3));
  const std::string first = to_csv(run_graph_torsion(spec_of(cfg)));
  CHECK(first == to_csv(run_graph_torsion(spec_of(cfg))));
  const auto fr = lines(first);
  for (const auto& row : fr | std::views::drop(1)) {
    for (int c = 0; c < 6; ++c) CHECK(std::isfinite(std::stod(column(row, c))));
  }
}

TEST_CASE("number formatting") {
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.5) == "0.5");
  for (double v : {0.1, 1.0 / 3, -2.718281828459045, 6.02214076e23, 1e-300}) {
    CHECK(std::stod(format_number(v)) == v);
  }
}

TEST_CASE("JSON output") {
  const RunReport r = run_verify(spec_of(circle_spec(sine(0.25, 3))));
  const json j = to_json(r);
  std::set<std::string> top;
  for (const auto& [k, v] : j.items()) top.insert(k);
  CHECK(top == std::set<std::string>{"spec", "samples", "summary"});
  for (const char* key : {"identity_value", "verdict", "sign_changes", "closure_defect", "ode_residual", "min_f",
                          "tau_min", "tau_max"}) {
    CHECK(j["summary"].contains(key));
  }
  CHECK(j["summary"]["closure_defect"].is_null());
  CHECK(j["spec"]["family"] == "circle");
  CHECK(j["samples"].size() == 1024);
  CHECK(j["samples"][0].contains("f"));
  CHECK(json::parse(j.dump()) == j);

  const json k = to_json(run_koenigs(spec_of({{"family", "beta"}, {"params", {{"r", 1}}}})));
  const auto& d = k["summary"]["closure_defect"];
  REQUIRE(d.is_array());
  CHECK(std::hypot(d[0].get<double>(), d[1].get<double>(), d[2].get<double>()) < 1e-6);
  CHECK(k["summary"]["verdict"] == "Closed");
  CHECK(k["summary"]["tau_min"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));

  const json eight = to_json(run_frenet(spec_of({{"family", "figure_eight"}, {"samples", 256}})));
  CHECK(eight["samples"][0]["tau"].is_null());
  CHECK(eight["samples"][1]["tau"].is_number());

  const json failed = to_json(run_koenigs(spec_of({{"family", "circle"}, {"params", {{"radius", 1}}}})));
  CHECK(failed["summary"]["diagnostics"][0]["module"] == "constant-torsion");
}

TEST_CASE("kernel run") {
  const RunReport r = run_kernel(spec_of({{"family", "ellipse"}, {"params", {{"a", 2}, {"b", 1}}}}));
  REQUIRE(r.ok());
  CHECK(*r.summary.ode_residual < 1e-8);
  CHECK(*r.summary.min_f > 0);
  CHECK(*r.summary.kappa_min == doctest::Approx(1.0 / 4).epsilon(1e-9));  // b / a^2
}

TEST_CASE("emit writes files and reports I/O failures with the path") {
  const RunReport r = run_frenet(spec_of({{"family", "circle"}, {"params", {{"radius", 1}}}, {"samples", 256}}));
  const auto path = std::filesystem::temp_directory_path() / "torsionkit_emit_test.csv";
  emit(r, OutputFormat::Csv, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == to_csv(r));
  std::filesystem::remove(path);

  const std::filesystem::path bad = "/nonexistent-dir/out.json";
  try {
    emit(r, OutputFormat::Json, bad);
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
    CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
  }
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}
