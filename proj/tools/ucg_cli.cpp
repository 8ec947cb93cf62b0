// Copyright 2026 The ucg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ucg: generate graphs and check claims about uniquely 3-edge-colorable
// cubic graphs. Reports are JSON; the exit code is the verdict.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ucg/claims.hpp"
#include "ucg/error.hpp"
#include "ucg/product.hpp"
#include "ucg/serialize.hpp"

namespace {

constexpr int kExitUsage = 2;

ucg::CubicGraph load_graph(const std::string& path) {
  std::vector<ucg::CubicGraph> graphs;
  if (path == "-") {
    graphs = ucg::read_graph6_stream(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw ucg::ParameterError("cannot open '" + path + "'");
    graphs = ucg::read_graph6_stream(in);
  }
  if (graphs.size() != 1) {
    throw ucg::ParameterError("'" + path + "' must hold exactly one graph6 line, found " +
                              std::to_string(graphs.size()));
  }
  return std::move(graphs.front());
}

void write_json(const ucg::Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ucg::ParameterError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

struct Args {
  // gen
  int m = 0;
  int k_param = 0;
  // shared
  int k = 2;
  std::uint64_t seed = ucg::kDefaultSeed;
  int samples = 50;
  int threads = 1;
  bool all_specs = false;
  bool timings = false;
  std::string claim;
  std::string graph, g1, g2, json;
};

int emit_report(const ucg::Json& report, const std::string& label, int code,
                const Args& args) {
  if (args.json.empty()) {
    std::cout << report.dump(2) << '\n';
  } else {
    write_json(report, args.json);
    std::cout << label << ": " << report.at("verdict").get<std::string>() << '\n';
  }
  return code;
}

int run_verify(const Args& args) {
  if (!ucg::is_claim(args.claim)) {
    std::string known;
    for (const auto& id : ucg::claim_ids()) known += " " + id;
    throw ucg::ParameterError("unknown claim '" + args.claim + "'; known:" + known);
  }
  ucg::ClaimOptions opts;
  if (!args.graph.empty()) opts.graph = load_graph(args.graph);
  if (!args.g1.empty()) opts.g1 = load_graph(args.g1);
  if (!args.g2.empty()) opts.g2 = load_graph(args.g2);
  opts.k = args.k;
  opts.seed = args.seed;
  opts.samples = args.samples;
  opts.all_specs = args.all_specs;
  opts.threads = args.threads;
  const ucg::ClaimReport r = ucg::run_claim(args.claim, opts);
  return emit_report(ucg::report_to_json(r, args.timings), r.claim, ucg::exit_code({r}),
                     args);
}

int run_report_all(const Args& args) {
  if (args.k > ucg::kFamilyGuard) {
    throw ucg::ParameterError("report-all needs k <= " + std::to_string(ucg::kFamilyGuard));
  }
  ucg::ClaimOptions opts;
  opts.seed = args.seed;
  opts.samples = args.samples;
  opts.threads = args.threads;
  const ucg::AggregateReport r = ucg::report_all(args.k, opts);
  ucg::Json j = ucg::aggregate_to_json(r, args.timings);
  if (args.json.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json(j, args.json);
    for (const auto& c : r.claims) {
      std::cout << c.claim << ": " << ucg::verdict_name(c.verdict) << '\n';
    }
  }
  return ucg::exit_code(r.claims);
}

int run_gen_family(const Args& args) {
  const auto members = ucg::generate_family(args.k, args.threads);
  ucg::Json traces = ucg::Json::array();
  for (const auto& m : members) {
    std::cout << ucg::to_graph6(m.graph) << '\n';
    ucg::Json t = ucg::trace_to_json(m);
    t["graph6"] = ucg::to_graph6(m.graph);
    traces.push_back(std::move(t));
  }
  if (!args.json.empty()) write_json(traces, args.json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate and certify uniquely 3-edge-colorable cubic graphs"};
  app.require_subcommand(1);
  Args args;

  auto* gen = app.add_subcommand("gen", "Print graphs as graph6 lines");
  gen->require_subcommand(1);
  auto* gen_petersen = gen->add_subcommand("petersen", "Generalized Petersen graph P(m,k)");
  gen_petersen->add_option("m", args.m, "Outer cycle length")->required();
  gen_petersen->add_option("k", args.k_param, "Inner step")->required();
  auto* gen_tutte = gen->add_subcommand("tutte-p92", "P(9,2) with the a_i/b_i labeling");
  auto* gen_family = gen->add_subcommand("family", "All members built from k copies of P(9,2)");
  gen_family->add_option("--k", args.k, "Number of copies")->required();
  gen_family->add_option("--json", args.json, "Write build traces to this file");
  gen_family->add_option("--threads", args.threads, "Worker threads")->check(CLI::Range(1, 256));

  auto* verify = app.add_subcommand("verify", "Check one claim and print its report");
  verify->add_option("claim", args.claim, "Claim id")->required();
  verify->add_option("--graph", args.graph, "graph6 file, or - for stdin");
  verify->add_option("--g1", args.g1, "First factor (multiplicativity)");
  verify->add_option("--g2", args.g2, "Second factor (multiplicativity)");
  verify->add_flag("--all-specs", args.all_specs, "Check every star product spec");
  verify->add_option("--samples", args.samples, "Specs sampled per pair")
      ->check(CLI::Range(1, 1000000));
  verify->add_option("--k", args.k, "Family size");
  verify->add_option("--seed", args.seed, "Sampling seed");
  verify->add_option("--json", args.json, "Write the report to this file");
  verify->add_option("--threads", args.threads, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_flag("--timings", args.timings, "Include wall time in the report");

  auto* report = app.add_subcommand("report-all", "Check every claim through family size k");
  report->add_option("--k", args.k, "Largest family size")->check(CLI::Range(1, 1000));
  report->add_option("--seed", args.seed, "Sampling seed");
  report->add_option("--samples", args.samples, "Specs sampled per pair")
      ->check(CLI::Range(1, 1000000));
  report->add_option("--json", args.json, "Write the report to this file");
  report->add_option("--threads", args.threads, "Worker threads")->check(CLI::Range(1, 256));
  report->add_flag("--timings", args.timings, "Include wall time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen_petersen->parsed()) {
      std::cout << ucg::to_graph6(ucg::generalized_petersen({args.m, args.k_param})) << '\n';
      return 0;
    }
    if (gen_tutte->parsed()) {
      std::cout << ucg::to_graph6(ucg::tutte_p92()) << '\n';
      return 0;
    }
    if (gen_family->parsed()) return run_gen_family(args);
    if (verify->parsed()) return run_verify(args);
    if (report->parsed()) return run_report_all(args);
  } catch (const ucg::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ucg::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ucg::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ucg::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
