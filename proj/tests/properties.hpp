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

// Randomized checks of the library invariants, shared by the property tests
// and the acceptance runner. Each check draws a fresh instance from a seeded
// generator and compares against oracles.hpp where one exists.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ucg/canonical.hpp"
#include "ucg/coloring.hpp"
#include "ucg/embedding.hpp"
#include "ucg/product.hpp"

namespace property {

using ucg::CubicGraph;
using ucg::EdgeId;
using ucg::Vertex;

struct Outcome {
  int checks = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

// Connected cubic graphs up to 10 vertices plus a few named graphs.
inline const std::vector<CubicGraph>& base_corpus() {
  static const std::vector<CubicGraph> corpus = [] {
    std::vector<CubicGraph> out;
    for (int n = 4; n <= 10; n += 2) {
      for (auto& g : oracle::connected_cubic_graphs(n)) out.push_back(std::move(g));
    }
    out.push_back(ucg::generalized_petersen({9, 2}));
    out.push_back(ucg::generalized_petersen({7, 2}));
    out.push_back(ucg::moebius_ladder(12));
    return out;
  }();
  return corpus;
}

// A corpus graph, or the composition of two small ones (at most 18 vertices).
inline CubicGraph random_graph(std::mt19937_64& rng) {
  const auto& corpus = base_corpus();
  if (rng() % 2 == 0) return corpus[rng() % corpus.size()];
  const std::size_t small = corpus.size() - 3;
  const CubicGraph& a = corpus[rng() % small];
  const CubicGraph& b = corpus[rng() % small];
  const ucg::StarProductSpec spec{static_cast<Vertex>(rng() % a.order()),
                                  static_cast<Vertex>(rng() % b.order()),
                                  static_cast<int>(rng() % 6)};
  return ucg::star_compose(a, b, spec).graph;
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::string tag(const char* name, const CubicGraph& g) {
  return std::string(name) + " on " + ucg::to_graph6(g);
}

// Every coloring is proper and each color class is a perfect matching.
inline void check_properness(std::mt19937_64& rng, Outcome& out) {
  const CubicGraph g = random_graph(rng);
  const auto colorings = ucg::enumerate_edge_colorings(g);
  const auto count = ucg::count_colorings(g);
  bool ok = count.labeled == colorings.size() &&
            (count.labeled == 0 || count.labeled == 6 * count.partitions);
  if (!colorings.empty()) {
    const auto& c = colorings[rng() % colorings.size()];
    ok = ok && ucg::is_proper(g, c);
    for (Vertex v = 0; v < g.order(); ++v) {
      int mask = 0;
      for (EdgeId e : g.incident(v)) mask |= 1 << c.colors[e];
      ok = ok && mask == 7;
    }
  }
  out.record(ok, tag("properness", g));
}

// Kempe chains of a pair are even cycles covering each vertex once, and a
// switch along any of them is proper and undone by a second switch.
inline void check_kempe(std::mt19937_64& rng, Outcome& out) {
  const CubicGraph g = random_graph(rng);
  const auto colorings = ucg::enumerate_edge_colorings(g);
  if (colorings.empty()) {
    out.record(ucg::count_colorings(g).labeled == 0, tag("kempe", g));
    return;
  }
  const auto& c = colorings[rng() % colorings.size()];
  const ucg::ColorPair pairs[] = {{0, 1}, {0, 2}, {1, 2}};
  const ucg::ColorPair pair = pairs[rng() % 3];
  const auto chains = ucg::kempe_cycles(g, c, pair);
  std::vector<int> hits(g.order(), 0);
  bool ok = true;
  for (const auto& chain : chains) {
    ok = ok && chain.edges.size() % 2 == 0 && chain.edges.size() == chain.vertices.size();
    for (Vertex v : chain.vertices) ++hits[v];
  }
  ok = ok && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  const auto& chain = chains[rng() % chains.size()];
  const auto switched = ucg::kempe_switch(g, c, chain);
  ok = ok && ucg::is_proper(g, switched) && ucg::kempe_switch(g, switched, chain) == c;
  out.record(ok, tag("kempe", g));
}

// Faces use each edge side once and satisfy Euler's formula; face count and
// orientability agree with the flag-orbit oracle.
inline void check_faces(std::mt19937_64& rng, Outcome& out) {
  const CubicGraph g = random_graph(rng);
  ucg::EmbeddingScheme s = ucg::rotation_scheme(g, rng());
  const bool signed_scheme = rng() % 2 == 1;
  if (signed_scheme) {
    for (int& x : s.signs) x = (rng() & 1) ? 1 : -1;
  }
  const auto r = ucg::face_trace(g, s);
  std::vector<int> uses(g.size(), 0);
  for (const auto& f : r.faces) {
    for (EdgeId e : f.edges) ++uses[e];
  }
  bool ok = std::all_of(uses.begin(), uses.end(), [](int u) { return u == 2; });
  const int faces = static_cast<int>(r.faces.size());
  ok = ok && g.order() - g.size() + faces == 2 - r.euler_genus;
  ok = ok && faces == oracle::face_count(g, s);
  ok = ok && r.orientable == oracle::orientable(g, s);
  if (!signed_scheme) ok = ok && r.orientable && r.euler_genus % 2 == 0;
  out.record(ok, tag("faces", g));
}

// Decomposing a composition along its matching gives back both factors.
inline void check_roundtrip(std::mt19937_64& rng, Outcome& out) {
  const auto& corpus = base_corpus();
  const CubicGraph& a = corpus[rng() % corpus.size()];
  const CubicGraph& b = corpus[rng() % corpus.size()];
  const ucg::StarProductSpec spec{static_cast<Vertex>(rng() % a.order()),
                                  static_cast<Vertex>(rng() % b.order()),
                                  static_cast<int>(rng() % 6)};
  const auto s = ucg::star_compose(a, b, spec);
  const auto [x, y] = ucg::star_decompose(s.graph, s.cut);
  out.record(s.cut.nontrivial && ucg::are_isomorphic(x, a) && ucg::are_isomorphic(y, b),
             tag("roundtrip", s.graph));
}

// Canonical forms ignore labels and reproduce themselves from the labeling.
inline void check_canonical(std::mt19937_64& rng, Outcome& out) {
  const CubicGraph g = random_graph(rng);
  const CubicGraph h = ucg::relabel(g, random_permutation(g.order(), rng));
  const auto cg = ucg::canonical_form(g);
  const auto ch = ucg::canonical_form(h);
  const bool ok = cg.graph6 == ch.graph6 &&
                  ucg::to_graph6(ucg::relabel(g, cg.labeling)) == cg.graph6 &&
                  ucg::to_graph6(ucg::relabel(h, ch.labeling)) == ch.graph6;
  out.record(ok, tag("canonical", g));
}

using Check = void (*)(std::mt19937_64&, Outcome&);

inline const std::vector<std::pair<std::string, Check>>& all_checks() {
  static const std::vector<std::pair<std::string, Check>> checks = {
      {"properness", check_properness}, {"kempe", check_kempe},
      {"faces", check_faces},           {"roundtrip", check_roundtrip},
      {"canonical", check_canonical}};
  return checks;
}

// Runs `count` checks of one kind, each with its own generator stream.
inline Outcome run(Check check, std::uint64_t seed, int count) {
  Outcome out;
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
    check(rng, out);
  }
  return out;
}

// Round-robin over every kind until `total` checks have run.
inline Outcome run_suite(std::uint64_t seed, int total) {
  Outcome out;
  const auto& checks = all_checks();
  for (int i = 0; i < total; ++i) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
    checks[i % checks.size()].second(rng, out);
  }
  return out;
}

}  // namespace property
