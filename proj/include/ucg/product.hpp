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

#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ucg/graph.hpp"

namespace ucg {

// One Y-composition: delete v1 from G1 and v2 from G2 and join their
// neighborhoods by a matching. The matching pairs the i-th smallest neighbor
// of v1 with the bijection_of(perm)[i]-th smallest neighbor of v2; `perm`
// indexes the six permutations of {0,1,2} in lexicographic order.
struct StarProductSpec {
  Vertex v1 = 0;
  Vertex v2 = 0;
  int perm = 0;

  bool operator==(const StarProductSpec&) const = default;
};

const std::array<int, 3>& bijection_of(int perm);

// Result of star_compose. Vertices of G1 - v1 come first, then G2 - v2, each
// in their original relative order. Edges: surviving G1 edges, surviving G2
// edges (both in identifier order), then the three matching edges in the
// order of v1's sorted neighbors.
struct StarProduct {
  CubicGraph graph;
  EdgeCut3 cut;                     // the matching
  std::vector<Vertex> vertex_map1;  // G1 vertex -> product vertex, -1 for v1
  std::vector<Vertex> vertex_map2;
  std::vector<EdgeId> edge_map1;    // G1 edge -> product edge; edges at v1
  std::vector<EdgeId> edge_map2;    // go to the matching edge replacing them
};

StarProduct star_compose(const CubicGraph& g1, const CubicGraph& g2,
                         const StarProductSpec& spec);

// Inverse of star_compose along a nontrivial 3-edge cut: each side gets a new
// vertex (its largest label) joined to the cut endpoints on that side. The
// first graph is the side containing vertex 0.
std::pair<CubicGraph, CubicGraph> star_decompose(const CubicGraph& g,
                                                 const EdgeCut3& cut);

// A member of the family generated from copies of P(9,2). `trace` replays the
// left-deep construction: trace[i] composes the graph built so far (v1) with
// a fresh generalized_petersen({9,2}) (v2). `origin[v]` names the copy and the
// P(9,2) vertex that v descends from.
struct FamilyMember {
  int k = 1;
  CubicGraph graph;
  std::vector<StarProductSpec> trace;
  std::vector<std::pair<int, Vertex>> origin;
  std::string canonical;
};

constexpr int kFamilyGuard = 4;

FamilyMember family_base();
FamilyMember extend_member(const FamilyMember& m, const StarProductSpec& spec);
FamilyMember replay_trace(const std::vector<StarProductSpec>& trace);

// All pairwise nonisomorphic members built from k copies, sorted by canonical
// graph6. Throws ParameterError for k < 1 and ResourceError for k > 4.
std::vector<FamilyMember> generate_family(int k, int threads = 1);

// Canonical forms of every member reachable by composing members of a and
// k - a copies for all splits, used to cross-check left-deep completeness.
std::set<std::string> family_forms_all_trees(int k, int threads = 1);

}  // namespace ucg
