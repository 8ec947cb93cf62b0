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

#include <set>

#include "oracles.hpp"
#include "ucg/canonical.hpp"
#include "ucg/coloring.hpp"
#include "ucg/error.hpp"
#include "ucg/product.hpp"
#include "ucg/serialize.hpp"

using namespace ucg;

namespace {

// Every composition of every member with P(9,2), no symmetry reduction.
std::set<std::string> brute_force_next(const std::vector<CubicGraph>& members) {
  const CubicGraph p = generalized_petersen({9, 2});
  std::set<std::string> forms;
  for (const auto& m : members) {
    for (Vertex v1 = 0; v1 < m.order(); ++v1) {
      for (Vertex v2 = 0; v2 < p.order(); ++v2) {
        for (int perm = 0; perm < 6; ++perm) {
          forms.insert(canonical_form(star_compose(m, p, {v1, v2, perm}).graph).graph6);
        }
      }
    }
  }
  return forms;
}

std::set<std::string> forms_of(const std::vector<FamilyMember>& members) {
  std::set<std::string> out;
  for (const auto& m : members) out.insert(m.canonical);
  return out;
}

}  // namespace

TEST_CASE("bijections are the six permutations in lexicographic order") {
  CHECK(bijection_of(0) == std::array<int, 3>{0, 1, 2});
  CHECK(bijection_of(1) == std::array<int, 3>{0, 2, 1});
  CHECK(bijection_of(5) == std::array<int, 3>{2, 1, 0});
  CHECK_THROWS_AS(bijection_of(6), DomainError);
}

TEST_CASE("K4 composed with K4 is the prism") {
  for (Vertex v1 = 0; v1 < 4; ++v1) {
    for (int perm = 0; perm < 6; ++perm) {
      const StarProduct s = star_compose(complete_k4(), complete_k4(), {v1, 0, perm});
      CHECK(are_isomorphic(s.graph, triangular_prism()));
      CHECK(s.cut.nontrivial);
    }
  }
}

TEST_CASE("P(9,2) composed with itself") {
  const CubicGraph p = generalized_petersen({9, 2});
  const StarProduct s = star_compose(p, p, {0, 0, 0});
  CHECK(s.graph.order() == 34);
  CHECK(s.graph.size() == 51);
  CHECK(s.cut.nontrivial);
  CHECK(s.cut.side_a.size() == 17);
  CHECK(s.cut.edges == std::array<EdgeId, 3>{48, 49, 50});
  CHECK(make_cut(s.graph, s.cut.edges).has_value());
  CHECK(s.vertex_map1[0] == -1);
  CHECK(s.vertex_map1[1] == 0);
  CHECK(s.vertex_map2[0] == -1);
  CHECK(s.vertex_map2[1] == 17);
  for (EdgeId e = 0; e < p.size(); ++e) {
    const Edge& old = p.edge(e);
    if (old.u == 0 || old.v == 0) {
      CHECK(s.edge_map1[e] >= 48);
      continue;
    }
    const Edge& now = s.graph.edge(s.edge_map1[e]);
    CHECK(std::minmax(s.vertex_map1[old.u], s.vertex_map1[old.v]) ==
          std::minmax(now.u, now.v));
  }
  // the matching follows the chosen bijection
  const auto n1 = p.neighbors(0);
  const auto n2 = p.neighbors(0);
  for (int perm = 0; perm < 6; ++perm) {
    const StarProduct t = star_compose(p, p, {0, 0, perm});
    for (int i = 0; i < 3; ++i) {
      const Edge& m = t.graph.edge(t.cut.edges[i]);
      const Vertex a = t.vertex_map1[n1[i]];
      const Vertex b = t.vertex_map2[n2[bijection_of(perm)[i]]];
      CHECK(std::minmax(a, b) == std::minmax(m.u, m.v));
    }
  }
}

TEST_CASE("compose rejects bad specs") {
  const CubicGraph p = generalized_petersen({9, 2});
  CHECK_THROWS_AS(star_compose(p, p, {18, 0, 0}), DomainError);
  CHECK_THROWS_AS(star_compose(p, p, {0, -1, 0}), DomainError);
  CHECK_THROWS_AS(star_compose(p, p, {0, 0, 6}), DomainError);
}

TEST_CASE("decompose inverts compose") {
  const CubicGraph p = generalized_petersen({9, 2});
  const CubicGraph q = complete_bipartite_k33();
  for (Vertex v1 : {0, 9, 17}) {
    for (Vertex v2 : {0, 4}) {
      for (int perm = 0; perm < 6; ++perm) {
        const StarProduct s = star_compose(p, q, {v1, v2, perm});
        const auto [a, b] = star_decompose(s.graph, s.cut);
        CHECK(are_isomorphic(a, p));
        CHECK(are_isomorphic(b, q));
      }
    }
  }
  const CubicGraph prism = triangular_prism();
  const auto cuts = enumerate_3_edge_cuts(prism, true);
  REQUIRE(cuts.size() == 1);
  const auto [a, b] = star_decompose(prism, cuts[0]);
  CHECK(are_isomorphic(a, complete_k4()));
  CHECK(are_isomorphic(b, complete_k4()));
  const auto trivial = enumerate_3_edge_cuts(prism, false).front();
  REQUIRE_FALSE(trivial.nontrivial);
  CHECK_THROWS_AS(star_decompose(prism, trivial), DomainError);
}

TEST_CASE("coloring counts multiply across compositions") {
  const std::vector<CubicGraph> corpus = {complete_k4(), triangular_prism(),
                                          complete_bipartite_k33(),
                                          generalized_petersen({9, 2}), petersen_graph()};
  for (const auto& g1 : corpus) {
    for (const auto& g2 : corpus) {
      const auto c1 = count_colorings(g1);
      const auto c2 = count_colorings(g2);
      for (Vertex v1 = 0; v1 < g1.order(); v1 += 3) {
        for (Vertex v2 = 0; v2 < g2.order(); v2 += 2) {
          for (int perm = 0; perm < 6; ++perm) {
            const CubicGraph s = star_compose(g1, g2, {v1, v2, perm}).graph;
            const auto c = count_colorings(s);
            CHECK(c.labeled * 6 == c1.labeled * c2.labeled);
            CHECK(c.partitions == c1.partitions * c2.partitions);
          }
        }
      }
    }
  }
  // independent count on one product
  const CubicGraph k33 = complete_bipartite_k33();
  const CubicGraph s = star_compose(k33, k33, {0, 3, 4}).graph;
  CHECK(oracle::colorings_via_matchings(s) == 24);
}

TEST_CASE("family sizes") {
  CHECK(generate_family(1).size() == 1);
  const auto k2 = generate_family(2);
  CHECK(k2.size() == 6);
  const auto k3 = generate_family(3);
  CHECK(k3.size() == 332);
  for (const auto& m : k2) {
    CHECK(m.graph.order() == 34);
    CHECK(m.trace.size() == 1);
  }
  for (const auto& m : k3) CHECK(m.graph.order() == 50);
  CHECK(std::is_sorted(k3.begin(), k3.end(),
                       [](const auto& a, const auto& b) { return a.canonical < b.canonical; }));
}

TEST_CASE("family matches unreduced enumeration") {
  const CubicGraph p = generalized_petersen({9, 2});
  const auto k2 = brute_force_next({p});
  CHECK(k2 == forms_of(generate_family(2)));
  std::vector<CubicGraph> level2;
  for (const auto& m : generate_family(2)) level2.push_back(m.graph);
  CHECK(brute_force_next(level2) == forms_of(generate_family(3)));
  CHECK(family_forms_all_trees(3) == forms_of(generate_family(3)));
}

TEST_CASE("members are uniquely colorable and replay from their traces") {
  for (const auto& m : generate_family(2)) {
    CHECK(is_uniquely_3_edge_colorable(m.graph));
    CHECK(is_triangle_free(m.graph));
    const FamilyMember r = replay_trace(m.trace);
    CHECK(to_graph6(r.graph) == to_graph6(m.graph));
    CHECK(r.origin == m.origin);
    CHECK(canonical_form(m.graph).graph6 == m.canonical);
    const Json j = trace_to_json(m);
    CHECK(j["k"] == 2);
    CHECK(trace_from_json(j) == m.trace);
  }
  for (const auto& m : generate_family(3)) {
    CHECK(count_colorings(m.graph) == ColoringCount{6, 1});
    CHECK(girth(m.graph) >= 4);
  }
}

TEST_CASE("origins name the surviving copy vertices") {
  for (const auto& m : generate_family(3)) {
    std::vector<std::set<Vertex>> per_copy(3);
    for (const auto& [copy, v] : m.origin) {
      REQUIRE(copy >= 0);
      REQUIRE(copy < 3);
      CHECK(per_copy[copy].insert(v).second);
    }
    std::size_t total = 0;
    for (const auto& s : per_copy) total += s.size();
    CHECK(total == 50);
    CHECK(per_copy[2].size() == 17);
  }
}

TEST_CASE("family guards") {
  CHECK_THROWS_AS(generate_family(0), ParameterError);
  CHECK_THROWS_AS(generate_family(5), ResourceError);
  CHECK_THROWS_AS(replay_trace({{40, 0, 0}}), DomainError);
}

TEST_CASE("composing at a bridge keeps the matching as the recorded cut") {
  const CubicGraph k4 = complete_k4();
  int bridged = 0;
  for (const auto& g : oracle::connected_cubic_graphs(10)) {
    for (Vertex v = 0; v < g.order(); ++v) {
      std::vector<char> removed(g.size(), 0);
      for (EdgeId e : g.incident(v)) removed[e] = 1;
      std::vector<int> component;
      // v's three edges split off more than v itself: v sits on a bridge
      if (components_without(g, removed, component) <= 2) continue;
      ++bridged;
      const StarProduct s = star_compose(g, k4, {v, 0, 0});
      CHECK_FALSE(make_cut(s.graph, s.cut.edges).has_value());
      CHECK(s.cut.nontrivial);
      CHECK(s.cut.side_a.size() == 9);
      const auto [a, b] = star_decompose(s.graph, s.cut);
      CHECK(are_isomorphic(a, g));
      CHECK(are_isomorphic(b, k4));
      EdgeCut3 edges_only = s.cut;
      edges_only.side_a.clear();
      edges_only.side_b.clear();
      CHECK_THROWS_AS(star_decompose(s.graph, edges_only), DomainError);
    }
  }
  CHECK(bridged > 0);
}
