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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "ucg/claims.hpp"
#include "ucg/coloring.hpp"
#include "ucg/embedding.hpp"
#include "ucg/error.hpp"
#include "ucg/hamilton.hpp"
#include "ucg/product.hpp"
#include "ucg/serialize.hpp"
#include "ucg/subdivision.hpp"

using namespace ucg;
namespace fs = std::filesystem;

namespace {

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "ucg_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI with stdout and stderr sent to files; returns the exit status.
int run_cli(const std::string& args, std::string* out = nullptr) {
  const fs::path so = scratch() / "stdout.txt";
  const fs::path se = scratch() / "stderr.txt";
  const std::string cmd = std::string("\"") + UCG_CLI_PATH + "\" " + args + " >\"" +
                          so.string() + "\" 2>\"" + se.string() + "\"";
  const int status = std::system(cmd.c_str());
  if (out) *out = read_file(so);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

ClaimOptions with_graph(const CubicGraph& g) {
  ClaimOptions o;
  o.graph = g;
  return o;
}

void check_certificate(const CubicGraph& g, const Json& cert, Pattern pattern) {
  REQUIRE(cert.is_object());
  const SubdivisionCertificate c = certificate_from_json(cert);
  CHECK(c.pattern == pattern);
  std::string why;
  CHECK_MESSAGE(verify_subdivision(g, c, {}, &why), why);
}

}  // namespace

TEST_CASE("claim registry") {
  const std::vector<std::string> expected = {
      "family",         "genus-exhaustive", "genus-family-k", "genus-p92",
      "multiplicativity", "nonplanar",      "petersen-minor", "projective-p92",
      "three-hamilton", "triangle-free",    "unique-coloring"};
  CHECK(claim_ids() == expected);
  CHECK(is_claim("nonplanar"));
  CHECK_FALSE(is_claim("planar"));
  CHECK_THROWS_AS(run_claim("planar", {}), ParameterError);
  ClaimOptions bad;
  bad.k = 0;
  CHECK_THROWS_AS(run_claim("family", bad), ParameterError);
  CHECK(verdict_name(Verdict::kPass) == "pass");
  CHECK(verdict_name(Verdict::kFail) == "fail");
  CHECK(verdict_name(Verdict::kSkippedGuard) == "skipped: guard");
}

TEST_CASE("exit codes follow the verdicts") {
  auto report = [](Verdict v) {
    ClaimReport r;
    r.verdict = v;
    return r;
  };
  CHECK(exit_code({report(Verdict::kPass)}) == 0);
  CHECK(exit_code({report(Verdict::kPass), report(Verdict::kSkippedGuard)}) == 0);
  CHECK(exit_code({report(Verdict::kSkippedGuard)}) == 3);
  CHECK(exit_code({report(Verdict::kFail), report(Verdict::kSkippedGuard)}) == 1);
  CHECK(exit_code({report(Verdict::kPass), report(Verdict::kFail)}) == 1);
}

TEST_CASE("timing is opt-in") {
  ClaimReport r = run_claim("triangle-free", with_graph(complete_k4()));
  CHECK(r.verdict == Verdict::kFail);
  CHECK(r.evidence["girth"] == 3);
  CHECK_FALSE(report_to_json(r).contains("wall_time"));
  CHECK(report_to_json(r, true).contains("wall_time"));
  CHECK(report_to_json(r).dump() == report_to_json(run_claim("triangle-free",
                                                             with_graph(complete_k4())))
                                        .dump());
}

TEST_CASE("unique-coloring evidence re-verifies") {
  const CubicGraph p = generalized_petersen({9, 2});
  const ClaimReport r = run_claim("unique-coloring", with_graph(p));
  CHECK(r.verdict == Verdict::kPass);
  CHECK(r.evidence["partitions"] == 1);
  CHECK(r.evidence["labeled"] == oracle::colorings_via_matchings(p));
  CHECK(is_proper(p, coloring_from_json(p, r.evidence["coloring"])));
  const ClaimReport q = run_claim("unique-coloring", with_graph(generalized_petersen({15, 2})));
  CHECK(q.verdict == Verdict::kFail);
  CHECK(q.evidence["partitions"] == 61);
}

TEST_CASE("three-hamilton evidence re-verifies") {
  for (int m : {9, 15}) {
    const CubicGraph g = generalized_petersen({m, 2});
    const ClaimReport r = run_claim("three-hamilton", with_graph(g));
    CHECK(r.verdict == Verdict::kPass);
    REQUIRE(r.evidence["cycles"].size() == 3);
    std::set<std::vector<Vertex>> distinct;
    for (const Json& c : r.evidence["cycles"]) {
      const HamiltonCycle h = cycle_from_json(c);
      CHECK(is_hamilton_cycle(g, h.vertices));
      distinct.insert(h.vertices);
    }
    CHECK(distinct.size() == 3);
    if (m == 15) CHECK(r.evidence["partitions"].get<int>() >= 2);
  }
  CHECK(run_claim("three-hamilton", with_graph(complete_bipartite_k33())).verdict ==
        Verdict::kFail);
}

TEST_CASE("nonplanar, genus and Petersen evidence re-verifies") {
  const CubicGraph p = generalized_petersen({9, 2});
  const ClaimReport np = run_claim("nonplanar", with_graph(p));
  CHECK(np.verdict == Verdict::kPass);
  check_certificate(p, np.evidence["certificate"], Pattern::kK33);
  CHECK(run_claim("nonplanar", with_graph(triangular_prism())).verdict == Verdict::kFail);

  const ClaimReport genus = run_claim("genus-p92", {});
  CHECK(genus.verdict == Verdict::kPass);
  CHECK(genus.evidence["genus"] == 1);
  const EmbeddingScheme w = scheme_from_json(genus.evidence["witness"]);
  CHECK(oracle::face_count(p, w) == 9);
  CHECK(oracle::orientable(p, w));
  check_certificate(p, genus.evidence["lower_bound_certificate"], Pattern::kK33);

  const ClaimReport minor = run_claim("petersen-minor", with_graph(p));
  CHECK(minor.verdict == Verdict::kPass);
  check_certificate(p, minor.evidence["hosts"][0]["certificate"], Pattern::kPetersen);
  CHECK(run_claim("petersen-minor", with_graph(complete_bipartite_k33())).verdict ==
        Verdict::kFail);
}

TEST_CASE("multiplicativity evidence re-verifies") {
  ClaimOptions o;
  o.g1 = complete_k4();
  o.g2 = generalized_petersen({9, 2});
  o.all_specs = true;
  const ClaimReport r = run_claim("multiplicativity", o);
  CHECK(r.verdict == Verdict::kPass);
  REQUIRE(r.evidence["pairs"].size() == 1);
  const Json& specs = r.evidence["pairs"][0]["specs"];
  CHECK(specs.size() == 6 * 4 * 18);
  for (std::size_t i = 0; i < specs.size(); i += 37) {
    const Json& s = specs[i];
    const StarProductSpec spec{s[0].get<int>(), s[1].get<int>(), s[2].get<int>()};
    const CubicGraph prod = star_compose(*o.g1, *o.g2, spec).graph;
    CHECK(oracle::colorings_via_matchings(prod) == 6 * s[3].get<std::uint64_t>());
  }
  // the default corpus samples every ordered pair
  const ClaimReport all = run_claim("multiplicativity", {});
  CHECK(all.verdict == Verdict::kPass);
  CHECK(all.evidence["pairs"].size() == 25);
  for (const Json& pair : all.evidence["pairs"]) {
    CHECK(pair["specs"].size() >= 50);
    CHECK(pair["mismatches"] == 0);
  }
}

TEST_CASE("family evidence replays") {
  ClaimOptions o;
  o.k = 2;
  const ClaimReport r = run_claim("family", o);
  CHECK(r.verdict == Verdict::kPass);
  CHECK(r.evidence["count"] == 6);
  for (const Json& m : r.evidence["members"]) {
    const CubicGraph g = from_graph6(m["graph6"].get<std::string>());
    CHECK(to_graph6(replay_trace(trace_from_json(m["trace"])).graph) == to_graph6(g));
    CHECK(count_colorings(g) == ColoringCount{6, 1});
    CHECK(girth(g) >= 4);
    check_certificate(g, m["nonplanar_certificate"], Pattern::kK33);
  }
}

TEST_CASE("guards are reported, not passed") {
  ClaimOptions o;
  o.k = 2;
  const ClaimReport r = run_claim("genus-exhaustive", o);
  CHECK(r.verdict == Verdict::kSkippedGuard);
  CHECK(exit_code({r}) == 3);
  o.k = 5;
  CHECK(run_claim("family", o).verdict == Verdict::kSkippedGuard);
}

TEST_CASE("command line generation and usage errors") {
  std::string out;
  CHECK(run_cli("gen petersen 9 2", &out) == 0);
  CHECK(out == to_graph6(generalized_petersen({9, 2})) + "\n");
  CHECK(run_cli("gen tutte-p92", &out) == 0);
  CHECK(from_graph6(out.substr(0, out.size() - 1)).order() == 18);
  CHECK(run_cli("gen petersen 2 1") == 2);
  CHECK(run_cli("gen petersen 9") == 2);
  CHECK(run_cli("gen nothing") == 2);
  CHECK(run_cli("verify no-such-claim") == 2);
  CHECK(run_cli("verify unique-coloring --graph /nonexistent/file") == 2);
  CHECK(run_cli("verify unique-coloring --graph " + write_file("bad.g6", "Q!!\n")) == 2);
  CHECK(run_cli("gen family --k 2", &out) == 0);
  CHECK(std::count(out.begin(), out.end(), '\n') == 6);
  const std::string traces = (scratch() / "traces.json").string();
  CHECK(run_cli("gen family --k 2 --json " + traces) == 0);
  const Json t = Json::parse(read_file(traces));
  REQUIRE(t.size() == 6);
  CHECK(t[0]["k"] == 2);
  CHECK(t[0]["specs"].size() == 1);
}

TEST_CASE("command line verdicts and exit codes") {
  const std::string p92 = write_file("p92.g6", to_graph6(generalized_petersen({9, 2})) + "\n");
  const std::string p15 = write_file("p15.g6", to_graph6(generalized_petersen({15, 2})) + "\n");
  std::string out;
  CHECK(run_cli("verify unique-coloring --graph " + p92, &out) == 0);
  const Json j = Json::parse(out);
  CHECK(j["verdict"] == "pass");
  CHECK(j["evidence"]["partitions"] == 1);
  CHECK(run_cli("verify unique-coloring --graph " + p15) == 1);
  CHECK(run_cli("verify three-hamilton --graph " + p15) == 0);
  CHECK(run_cli("verify genus-exhaustive --k 2") == 3);
  const std::string report = (scratch() / "report.json").string();
  CHECK(run_cli("verify triangle-free --graph " + p92 + " --json " + report, &out) == 0);
  CHECK(out == "triangle-free: pass\n");
  CHECK(Json::parse(read_file(report))["evidence"]["girth"] == 5);
  CHECK(run_cli("verify triangle-free --graph - < " + p92) == 0);
}

TEST_CASE("report-all is reproducible byte for byte") {
  const std::string a = (scratch() / "all_a.json").string();
  const std::string b = (scratch() / "all_b.json").string();
  CHECK(run_cli("report-all --k 1 --json " + a) == 0);
  CHECK(run_cli("report-all --k 1 --json " + b) == 0);
  const std::string text = read_file(a);
  CHECK(text == read_file(b));
  const Json j = Json::parse(text);
  CHECK(j["summary"]["verdict"] == "pass");
  CHECK(j["summary"]["failed"] == 0);
  std::vector<std::string> ids;
  for (const Json& c : j["claims"]) ids.push_back(c["claim"].get<std::string>());
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::count(ids.begin(), ids.end(), "projective-p92") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "genus-exhaustive-k1") == 1);
  // the projective witness in the report checks out independently
  for (const Json& c : j["claims"]) {
    if (c["claim"] != "projective-p92") continue;
    const CubicGraph p = generalized_petersen({9, 2});
    const EmbeddingScheme w = scheme_from_json(c["evidence"]["witness"]);
    CHECK(oracle::face_count(p, w) == 10);
    CHECK_FALSE(oracle::orientable(p, w));
  }
}
