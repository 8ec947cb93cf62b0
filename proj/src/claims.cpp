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

#include "ucg/claims.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

#include "ucg/canonical.hpp"
#include "ucg/coloring.hpp"
#include "ucg/embedding.hpp"
#include "ucg/error.hpp"
#include "ucg/hamilton.hpp"
#include "ucg/product.hpp"
#include "ucg/subdivision.hpp"

namespace ucg {
namespace {

using ClaimFn = std::function<void(const ClaimOptions&, ClaimReport&)>;

const CubicGraph& p92() {
  static const CubicGraph g = generalized_petersen({9, 2});
  return g;
}

const CubicGraph& graph_or_p92(const ClaimOptions& opts) {
  return opts.graph ? *opts.graph : p92();
}

Verdict verdict_of(bool ok) { return ok ? Verdict::kPass : Verdict::kFail; }

Json member_json(const FamilyMember& m) {
  return {{"graph6", to_graph6(m.graph)}, {"trace", trace_to_json(m)}};
}

// Searches are deterministic, so one result per graph can be shared between
// claims in the same process.
std::optional<EmbeddingScheme> projective_witness(const CubicGraph& g) {
  static std::mutex mu;
  static std::map<std::string, std::optional<EmbeddingScheme>> cache;
  const std::string key = to_graph6(g);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto found = projective_planar_search(g);
  std::lock_guard lock(mu);
  cache.emplace(key, found);
  return found;
}

Json trace_summary(const FaceTraceResult& t) {
  return {{"faces", t.faces.size()}, {"euler_genus", t.euler_genus},
          {"orientable", t.orientable}};
}

// -- individual claims -------------------------------------------------------

void unique_coloring(const ClaimOptions& opts, ClaimReport& r) {
  const CubicGraph& g = graph_or_p92(opts);
  r.inputs = {{"graph6", to_graph6(g)}};
  const ColoringCount count = count_colorings(g);
  r.evidence = {{"labeled", count.labeled}, {"partitions", count.partitions}};
  bool ok = count.partitions == 1;
  if (count.partitions > 0) {
    const auto parts = enumerate_partitions(g);
    ok = ok && is_proper(g, parts.front());
    r.evidence["coloring"] = coloring_to_json(g, parts.front());
  }
  r.verdict = verdict_of(ok);
}

void three_hamilton(const ClaimOptions& opts, ClaimReport& r) {
  const CubicGraph& g = graph_or_p92(opts);
  r.inputs = {{"graph6", to_graph6(g)}};
  const auto cycles = enumerate_hamilton_cycles(g);
  const ColoringCount count = count_colorings(g);
  Json listed = Json::array();
  bool ok = cycles.size() == 3;
  for (const auto& h : cycles) {
    listed.push_back(cycle_to_json(h));
    ok = ok && is_hamilton_cycle(g, h.vertices);
  }
  r.evidence = {{"count", cycles.size()}, {"cycles", listed},
                {"partitions", count.partitions}};
  if (count.partitions == 1) {
    // Each pair of color classes of the unique coloring is one of the cycles.
    const EdgeColoring c = enumerate_partitions(g).front();
    bool classes_match = true;
    for (const auto& h : cycles) {
      const EdgeColoring from_cycle = coloring_from_hamilton(g, h);
      classes_match = classes_match && same_partition(from_cycle, c);
    }
    r.evidence["color_classes_are_cycles"] = classes_match;
    ok = ok && classes_match;
  } else if (cycles.size() == 3) {
    r.evidence["note"] = "exactly three Hamilton cycles but " +
                         std::to_string(count.partitions) +
                         " colorings up to color permutation";
  }
  r.verdict = verdict_of(ok);
}

std::vector<StarProductSpec> choose_specs(const CubicGraph& a, const CubicGraph& b,
                                          const ClaimOptions& opts,
                                          std::uint64_t stream) {
  const long total = 6L * a.order() * b.order();
  std::vector<long> index(total);
  std::iota(index.begin(), index.end(), 0L);
  if (!opts.all_specs && opts.samples < total) {
    std::vector<long> picked;
    std::mt19937_64 rng(opts.seed + stream);
    std::sample(index.begin(), index.end(), std::back_inserter(picked), opts.samples, rng);
    index = std::move(picked);
  }
  std::vector<StarProductSpec> specs;
  for (long i : index) {
    specs.push_back({static_cast<Vertex>(i / (6L * b.order())),
                     static_cast<Vertex>((i / 6) % b.order()), static_cast<int>(i % 6)});
  }
  return specs;
}

void multiplicativity(const ClaimOptions& opts, ClaimReport& r) {
  std::vector<std::pair<std::string, CubicGraph>> left, right;
  if (opts.g1 || opts.g2) {
    if (!opts.g1 || !opts.g2) throw ParameterError("multiplicativity needs both --g1 and --g2");
    left.push_back({"g1", *opts.g1});
    right.push_back({"g2", *opts.g2});
  } else {
    const std::vector<std::pair<std::string, CubicGraph>> corpus = {
        {"K4", complete_k4()},           {"prism", triangular_prism()},
        {"K33", complete_bipartite_k33()}, {"P(9,2)", p92()},
        {"Petersen", petersen_graph()}};
    left = right = corpus;
  }
  r.inputs = {{"seed", opts.seed}, {"samples", opts.samples}, {"all_specs", opts.all_specs}};
  Json pairs = Json::array();
  bool ok = true;
  std::uint64_t stream = 0;
  for (const auto& [name1, g1] : left) {
    const std::uint64_t p1 = count_colorings(g1).partitions;
    for (const auto& [name2, g2] : right) {
      const std::uint64_t p2 = count_colorings(g2).partitions;
      Json checked = Json::array();
      int mismatches = 0;
      for (const auto& spec : choose_specs(g1, g2, opts, stream++)) {
        const std::uint64_t p = count_colorings(star_compose(g1, g2, spec).graph).partitions;
        if (p != p1 * p2) ++mismatches;
        checked.push_back({spec.v1, spec.v2, spec.perm, p});
      }
      ok = ok && mismatches == 0;
      pairs.push_back({{"g1", name1}, {"g1_graph6", to_graph6(g1)}, {"g2", name2},
                       {"g2_graph6", to_graph6(g2)}, {"partitions1", p1},
                       {"partitions2", p2}, {"mismatches", mismatches},
                       {"specs", std::move(checked)}});
    }
  }
  r.evidence = {{"pairs", std::move(pairs)}};
  r.verdict = verdict_of(ok);
}

void triangle_free(const ClaimOptions& opts, ClaimReport& r) {
  const CubicGraph& g = graph_or_p92(opts);
  r.inputs = {{"graph6", to_graph6(g)}};
  r.evidence = {{"girth", girth(g)}};
  r.verdict = verdict_of(is_triangle_free(g));
}

void nonplanar(const ClaimOptions& opts, ClaimReport& r) {
  const CubicGraph& g = graph_or_p92(opts);
  r.inputs = {{"graph6", to_graph6(g)}};
  const auto cert = find_k33_subdivision(g, {});
  r.evidence = {{"certificate", cert ? certificate_to_json(*cert) : Json()}};
  r.verdict = verdict_of(cert && verify_subdivision(g, *cert));
}

void genus_p92(const ClaimOptions& opts, ClaimReport& r) {
  const CubicGraph& g = graph_or_p92(opts);
  r.inputs = {{"graph6", to_graph6(g)}};
  const GenusWitness w = min_orientable_genus_exhaustive(g);
  const FaceTraceResult t = face_trace(g, w.witness);
  const auto cert = find_k33_subdivision(g, {});
  r.evidence = {{"genus", w.genus},
                {"witness", scheme_to_json(w.witness)},
                {"face_trace", trace_summary(t)},
                {"lower_bound_certificate", cert ? certificate_to_json(*cert) : Json()}};
  r.verdict = verdict_of(w.genus == 1 && t.orientable && t.euler_genus == 2 && cert &&
                         verify_subdivision(g, *cert));
}

void projective_p92(const ClaimOptions& opts, ClaimReport& r) {
  const CubicGraph& g = graph_or_p92(opts);
  r.inputs = {{"graph6", to_graph6(g)}};
  if (g.order() > kEmbeddingSearchGuard) {
    throw ResourceError("projective search is limited to " +
                        std::to_string(kEmbeddingSearchGuard) + " vertices");
  }
  const auto witness = projective_witness(g);
  if (!witness) {
    r.evidence = {{"witness", nullptr}};
    r.verdict = Verdict::kFail;
    return;
  }
  const FaceTraceResult t = face_trace(g, *witness);
  r.evidence = {{"witness", scheme_to_json(*witness)}, {"face_trace", trace_summary(t)}};
  r.verdict = verdict_of(t.euler_genus == 1 && !t.orientable);
}

std::vector<FamilyMember> family_for(const ClaimOptions& opts) {
  return generate_family(opts.k, opts.threads);
}

void family(const ClaimOptions& opts, ClaimReport& r) {
  r.inputs = {{"k", opts.k}};
  const auto members = family_for(opts);
  Json listed = Json::array();
  bool ok = !members.empty() && (opts.k < 2 || members.size() >= 2);
  for (const auto& m : members) {
    const bool unique = is_uniquely_3_edge_colorable(m.graph);
    const bool tf = is_triangle_free(m.graph);
    const auto cert = find_k33_subdivision(m.graph, {});
    const bool sized = m.graph.order() == 16 * m.k + 2;
    ok = ok && unique && tf && cert && sized;
    Json item = member_json(m);
    item["uniquely_colorable"] = unique;
    item["triangle_free"] = tf;
    item["nonplanar_certificate"] = cert ? certificate_to_json(*cert) : Json();
    listed.push_back(std::move(item));
  }
  r.evidence = {{"count", members.size()}, {"members", std::move(listed)}};
  r.verdict = verdict_of(ok);
}

void genus_exhaustive(const ClaimOptions& opts, ClaimReport& r) {
  r.inputs = {{"k", opts.k}};
  // Members have 16k + 2 vertices; no need to build them to see the guard.
  if (16 * opts.k + 2 > kEmbeddingSearchGuard) {
    throw ResourceError("exhaustive genus is limited to " +
                        std::to_string(kEmbeddingSearchGuard) + " vertices; members have " +
                        std::to_string(16 * opts.k + 2));
  }
  const auto members = family_for(opts);
  Json listed = Json::array();
  bool ok = true;
  int executed = 0;
  for (const auto& m : members) {
    Json item = member_json(m);
    if (m.graph.order() > kEmbeddingSearchGuard) {
      item["verdict"] = verdict_name(Verdict::kSkippedGuard);
    } else {
      ++executed;
      const GenusWitness w = min_orientable_genus_exhaustive(m.graph);
      const FaceTraceResult t = face_trace(m.graph, w.witness);
      const bool good = w.genus == m.k && t.orientable && t.euler_genus == 2 * w.genus;
      ok = ok && good;
      item["genus"] = w.genus;
      item["witness"] = scheme_to_json(w.witness);
      item["verdict"] = verdict_name(verdict_of(good));
    }
    listed.push_back(std::move(item));
  }
  r.evidence = {{"members", std::move(listed)}};
  r.verdict = executed == 0 ? Verdict::kSkippedGuard : verdict_of(ok);
}

// Glues copies of the base scheme along the member's build trace.
EmbeddingScheme merge_along(const FamilyMember& m, const EmbeddingScheme& base) {
  CubicGraph g = p92();
  EmbeddingScheme s = base;
  for (const auto& spec : m.trace) {
    s = merge_embeddings(g, s, p92(), base, spec);
    g = star_compose(g, p92(), spec).graph;
  }
  if (!(g == m.graph)) throw DomainError("build trace does not reproduce the member");
  return s;
}

void genus_family(const ClaimOptions& opts, ClaimReport& r) {
  r.inputs = {{"k", opts.k}};
  const auto members = family_for(opts);
  const EmbeddingScheme torus = min_orientable_genus_exhaustive(p92()).witness;
  const auto projective = projective_witness(p92());
  if (!projective) throw DomainError("no projective scheme for P(9,2)");
  Json listed = Json::array();
  bool bounds_ok = true;
  int exact = 0;
  for (const auto& m : members) {
    const EmbeddingScheme so = merge_along(m, torus);
    const EmbeddingScheme sn = merge_along(m, *projective);
    const FaceTraceResult to = face_trace(m.graph, so);
    const FaceTraceResult tn = face_trace(m.graph, sn);
    const bool upper = to.orientable && to.euler_genus == 2 * m.k && !tn.orientable &&
                       tn.euler_genus == m.k;
    bounds_ok = bounds_ok && upper;
    const DisjointSubdivisions lower = find_disjoint_k33_subdivisions(m);
    Json certs = Json::array();
    for (const auto& c : lower.certificates) certs.push_back(certificate_to_json(c));
    if (lower.ok()) ++exact;
    Json item = member_json(m);
    item["orientable_scheme"] = scheme_to_json(so);
    item["orientable_face_trace"] = trace_summary(to);
    item["nonorientable_scheme"] = scheme_to_json(sn);
    item["nonorientable_face_trace"] = trace_summary(tn);
    item["lower_bound_applies"] = lower.ok();
    if (lower.ok()) {
      item["disjoint_k33"] = std::move(certs);
    } else {
      item["failed_copy"] = lower.failed_copy;
    }
    listed.push_back(std::move(item));
  }
  r.evidence = {{"count", members.size()},
                {"exact_genus_members", exact},
                {"members", std::move(listed)}};
  r.verdict = verdict_of(bounds_ok && exact > 0);
}

void petersen_minor(const ClaimOptions& opts, ClaimReport& r) {
  std::vector<std::pair<Json, CubicGraph>> hosts;
  if (opts.graph) {
    r.inputs = {{"graph6", to_graph6(*opts.graph)}};
    hosts.push_back({Json{{"graph6", to_graph6(*opts.graph)}}, *opts.graph});
  } else {
    r.inputs = {{"k", opts.k}};
    hosts.push_back({Json{{"graph6", to_graph6(p92())}}, p92()});
    if (opts.k > 1) {
      for (const auto& m : family_for(opts)) hosts.push_back({member_json(m), m.graph});
    }
  }
  Json listed = Json::array();
  bool ok = true;
  for (auto& [item, g] : hosts) {
    const auto cert = find_petersen_subdivision(g);
    ok = ok && cert && verify_subdivision(g, *cert);
    item["certificate"] = cert ? certificate_to_json(*cert) : Json();
    listed.push_back(std::move(item));
  }
  r.evidence = {{"hosts", std::move(listed)}};
  r.verdict = verdict_of(ok);
}

const std::map<std::string, ClaimFn>& registry() {
  static const std::map<std::string, ClaimFn> claims = {
      {"family", family},
      {"genus-exhaustive", genus_exhaustive},
      {"genus-family-k", genus_family},
      {"genus-p92", genus_p92},
      {"multiplicativity", multiplicativity},
      {"nonplanar", nonplanar},
      {"petersen-minor", petersen_minor},
      {"projective-p92", projective_p92},
      {"three-hamilton", three_hamilton},
      {"triangle-free", triangle_free},
      {"unique-coloring", unique_coloring},
  };
  return claims;
}

ClaimReport run_named(const std::string& name, std::string_view id,
                      const ClaimOptions& opts) {
  const auto it = registry().find(std::string(id));
  if (it == registry().end()) throw ParameterError("unknown claim '" + std::string(id) + "'");
  if (opts.k < 1) throw ParameterError("k must be at least 1");
  ClaimReport r;
  r.claim = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second(opts, r);
  } catch (const ResourceError& e) {
    r.verdict = Verdict::kSkippedGuard;
    r.evidence = {{"guard", e.what()}};
  }
  r.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkippedGuard:
      return "skipped: guard";
  }
  return "fail";
}

Json report_to_json(const ClaimReport& r, bool with_timing) {
  Json out = {{"claim", r.claim},
              {"inputs", r.inputs},
              {"verdict", verdict_name(r.verdict)},
              {"evidence", r.evidence}};
  if (with_timing) out["wall_time"] = r.wall_time;
  return out;
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool is_claim(std::string_view id) {
  return registry().count(std::string(id)) > 0;
}

ClaimReport run_claim(std::string_view id, const ClaimOptions& opts) {
  return run_named(std::string(id), id, opts);
}

AggregateReport report_all(int k, const ClaimOptions& base) {
  if (k < 1) throw ParameterError("k must be at least 1");
  AggregateReport out;
  auto add = [&](const std::string& name, std::string_view id, ClaimOptions opts) {
    out.claims.push_back(run_named(name, id, opts));
  };
  ClaimOptions plain = base;
  plain.graph.reset();
  plain.g1.reset();
  plain.g2.reset();
  add("unique-coloring", "unique-coloring", plain);
  add("three-hamilton", "three-hamilton", plain);
  {
    ClaimOptions p15 = plain;
    p15.graph = generalized_petersen({15, 2});
    add("three-hamilton-p15-2", "three-hamilton", p15);
  }
  add("multiplicativity", "multiplicativity", plain);
  add("triangle-free", "triangle-free", plain);
  add("nonplanar", "nonplanar", plain);
  add("genus-p92", "genus-p92", plain);
  add("projective-p92", "projective-p92", plain);
  for (int j = 1; j <= k; ++j) {
    ClaimOptions level = plain;
    level.k = j;
    const std::string suffix = "-k" + std::to_string(j);
    add("family" + suffix, "family", level);
    add("genus-exhaustive" + suffix, "genus-exhaustive", level);
    if (j >= 2) {
      add("genus-family" + suffix, "genus-family-k", level);
      add("petersen-minor" + suffix, "petersen-minor", level);
    }
  }
  std::stable_sort(out.claims.begin(), out.claims.end(),
                   [](const ClaimReport& a, const ClaimReport& b) { return a.claim < b.claim; });
  for (const auto& c : out.claims) {
    if (c.verdict == Verdict::kPass) ++out.passed;
    if (c.verdict == Verdict::kFail) ++out.failed;
    if (c.verdict == Verdict::kSkippedGuard) ++out.skipped;
  }
  return out;
}

Json aggregate_to_json(const AggregateReport& r, bool with_timing) {
  Json claims = Json::array();
  for (const auto& c : r.claims) claims.push_back(report_to_json(c, with_timing));
  const int code = exit_code(r.claims);
  return {{"summary",
           {{"verdict", code == 0 ? "pass" : code == 1 ? "fail" : "skipped: guard"},
            {"passed", r.passed},
            {"failed", r.failed},
            {"skipped", r.skipped}}},
          {"claims", std::move(claims)}};
}

int exit_code(const std::vector<ClaimReport>& reports) {
  bool executed = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::kFail) return 1;
    if (r.verdict == Verdict::kPass) executed = true;
  }
  return executed ? 0 : 3;
}

}  // namespace ucg
