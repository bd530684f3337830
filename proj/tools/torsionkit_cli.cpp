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

// torsionkit command-line driver.
//
//   torsionkit verify --config run.json --out json --dest report.json
//   torsionkit counterexample hypotrochoid_graph
//   torsionkit selfcheck

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "torsionkit/acceptance.hpp"
#include "torsionkit/curve_spec.hpp"
#include "torsionkit/families.hpp"
#include "torsionkit/pipeline.hpp"
#include "torsionkit/report.hpp"

namespace tk = torsionkit;

namespace {

struct CommonFlags {
  std::string config;
  std::optional<std::string> metric;
  std::optional<std::size_t> samples;
  std::optional<int> winding;
  std::optional<double> tol;
  std::string out = "csv";
  std::string dest;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "JSON run configuration")->check(CLI::ExistingFile);
  cmd->add_option("--metric", f.metric, "euclidean or lorentz")->check(CLI::IsMember({"euclidean", "lorentz"}));
  cmd->add_option("--samples", f.samples, "samples per base period (power of two >= 256)");
  cmd->add_option("--winding", f.winding, "winding number k of the height function");
  cmd->add_option("--tol", f.tol, "relative tolerance for the weighted identity");
  cmd->add_option("--out", f.out, "output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--dest", f.dest, "output path (stdout when omitted)");
}

nlohmann::json default_config(const std::string& command) {
  if (command == "frenet") return {{"family", "helix"}, {"params", {{"a", 1.0}, {"b", 1.0}}}};
  if (command == "koenigs") return {{"family", "beta"}, {"params", {{"r", 1.0}}}};
  return {{"family", "circle"},
          {"params", {{"radius", 1.0}}},
          {"height", {{"type", "sine"}, {"params", {{"amp", 0.25}, {"freq", 3.0}}}}}};
}

tk::CurveSpec load_spec(const std::string& command, const CommonFlags& f) {
  nlohmann::json doc;
  if (f.config.empty()) {
    doc = default_config(command);
  } else {
    std::ifstream in(f.config);
    if (!in) throw tk::Error(tk::ErrorCode::Io, "gallery-cli", "cannot read '" + f.config + "'");
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw tk::Error(tk::ErrorCode::InvalidArgument, "gallery-cli", f.config + ": " + e.what());
    }
  }
  if (f.metric) doc["metric"] = *f.metric;
  if (f.samples) doc["samples"] = *f.samples;
  if (f.winding) doc["winding"] = *f.winding;
  return tk::parse_curve_spec(doc);
}

int finish(const tk::RunReport& report, const CommonFlags& f) {
  const auto format = tk::parse_format(f.out);
  if (f.dest.empty()) {
    tk::emit(report, format, std::cout);
  } else {
    tk::emit(report, format, std::filesystem::path(f.dest));
  }
  for (const auto& d : report.summary.diagnostics) {
    std::cerr << "error [" << d.module << "] " << d.code << ": " << d.message << '\n';
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torsionkit: torsion of closed space curves"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string counterexample;
  bool list_only = false;

  std::vector<std::pair<std::string, CLI::App*>> runs;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"frenet", "Frenet apparatus of a family curve"},
           {"graph-torsion", "torsion of a graph over a convex base"},
           {"verify", "kernel, weighted identity and sign-change verdict"},
           {"kernel", "kernel solution f over a convex base"},
           {"koenigs", "constant-torsion curve from the beta family"}}) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common(cmd, flags);
    runs.emplace_back(name, cmd);
  }
  CLI::App* cex = app.add_subcommand("counterexample", "trochoid graphs with positive torsion");
  cex->add_option("name", counterexample, "hypotrochoid_graph or epitrochoid_graph")->required();
  cex->add_option("--samples", flags.samples, "samples over one period");
  cex->add_option("--out", flags.out, "output format")->check(CLI::IsMember({"csv", "json"}));
  cex->add_option("--dest", flags.dest, "output path (stdout when omitted)");
  CLI::App* gallery = app.add_subcommand("gallery", "curve family registry");
  gallery->add_subcommand("list", "list registered families")->callback([&] { list_only = true; });
  gallery->require_subcommand(1);
  CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the acceptance suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list_only) {
      for (const auto& fam : tk::registered_families()) {
        std::string params;
        for (const auto& p : fam.required) params += (params.empty() ? "" : ",") + p;
        for (const auto& p : fam.optional) params += (params.empty() ? "[" : ",[") + p + "]";
        std::cout << fam.name << '\t' << params << '\t' << fam.description << '\n';
      }
      for (const auto& name : tk::counterexample_names()) std::cout << name << "\t-\tcounterexample\n";
      return 0;
    }
    if (selfcheck->parsed()) {
      bool ok = true;
      for (const auto& r : tk::run_acceptance()) {
        std::cout << tk::format_result(r) << '\n';
        ok = ok && r.passed;
      }
      return ok ? 0 : 1;
    }
    if (cex->parsed()) {
      return finish(tk::run_counterexample(counterexample, flags.samples.value_or(tk::kDefaultSamples)), flags);
    }
    for (const auto& [name, cmd] : runs) {
      if (!cmd->parsed()) continue;
      const tk::CurveSpec spec = load_spec(name, flags);
      if (name == "frenet") return finish(tk::run_frenet(spec), flags);
      if (name == "graph-torsion") return finish(tk::run_graph_torsion(spec), flags);
      if (name == "kernel") return finish(tk::run_kernel(spec), flags);
      if (name == "koenigs") return finish(tk::run_koenigs(spec), flags);
      tk::IdentityOptions opts;
      if (flags.tol) opts.relative_tol = *flags.tol;
      return finish(tk::run_verify(spec, opts), flags);
    }
  } catch (const tk::Error& e) {
    std::cerr << "error [" << e.module() << "] " << tk::to_string(e.code()) << ": " << e.detail() << '\n';
    return 2;
  }
  return 0;
}
