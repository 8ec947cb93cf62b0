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
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ucg {

using Vertex = int;
using EdgeId = int;

// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

// A simple 3-regular undirected graph. Edge identifiers are the positions in
// the edge list passed to the constructor and never change afterwards; the
// incidence list of every vertex is sorted by edge identifier.
//
// Construction validates the cubic invariants and throws DomainError naming
// the first offending vertex or edge.
class CubicGraph {
 public:
  CubicGraph(int order, std::vector<Edge> edges);

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::array<EdgeId, 3>& incident(Vertex v) const { return incident_[v]; }

  Vertex other(EdgeId e, Vertex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }
  std::array<Vertex, 3> neighbors(Vertex v) const;
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  bool operator==(const CubicGraph& o) const {
    return order_ == o.order_ && edges_ == o.edges_;
  }

 private:
  int order_;
  std::vector<Edge> edges_;
  std::vector<std::array<EdgeId, 3>> incident_;
};

// P(m,k): outer cycle u_i u_{i+1}, spokes u_i w_i, inner edges w_i w_{i+k}.
struct GeneralizedPetersenParams {
  int m = 0;
  int k = 0;
};

// Three edges that are exactly the edges between two complementary vertex
// sets. `side_a` is the set containing vertex 0; both sides are sorted.
// Enumerated cuts leave exactly two components; a star product matching can
// leave more when a factor has a bridge at the deleted vertex.
struct EdgeCut3 {
  std::array<EdgeId, 3> edges{};
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  // Each side spans at least as many edges as vertices (contains a cycle).
  bool nontrivial = false;

  bool operator==(const EdgeCut3&) const = default;
};

// Generators. Vertex labels are fixed: for P(m,k) the outer vertices are
// 0..m-1 and the inner vertices m..2m-1; edges are listed outer cycle, then
// spokes, then inner edges.
CubicGraph generalized_petersen(GeneralizedPetersenParams params);
// P(9,2) in the a_i / b_i indexing: a_i = i, b_i = 9 + i, cycles on both
// and extra edges a_i b_{2i}.
CubicGraph tutte_p92();
CubicGraph complete_k4();
CubicGraph complete_bipartite_k33();
CubicGraph triangular_prism();
CubicGraph petersen_graph();
// Möbius ladder on n vertices: an n-cycle plus its n/2 long diagonals.
CubicGraph moebius_ladder(int n);

// Applies the vertex permutation `perm` (old -> new); edge identifiers are
// kept.
CubicGraph relabel(const CubicGraph& g, std::span<const Vertex> perm);

bool is_connected(const CubicGraph& g);
// Component index per vertex when the edges flagged in `removed` are deleted.
// Returns the number of components.
int components_without(const CubicGraph& g, std::span<const char> removed,
                       std::vector<int>& component);

// Length of the shortest cycle (BFS from every vertex).
int girth(const CubicGraph& g);
bool is_triangle_free(const CubicGraph& g);

// Builds the cut record for `edges`, or nullopt when removing them does not
// leave exactly two components.
std::optional<EdgeCut3> make_cut(const CubicGraph& g, std::array<EdgeId, 3> edges);

// The cut between `side` and its complement, or nullopt unless exactly three
// edges cross and both sets are nonempty.
std::optional<EdgeCut3> make_cut_between(const CubicGraph& g, std::span<const Vertex> side);

// All 3-edge sets whose removal leaves exactly two components, ordered
// lexicographically by edge identifiers.
std::vector<EdgeCut3> enumerate_3_edge_cuts(const CubicGraph& g,
                                            bool nontrivial_only);

std::string to_graph6(const CubicGraph& g);
// Parses one graph6 line. A leading ">>graph6<<" header and trailing line
// terminators are accepted.
CubicGraph from_graph6(std::string_view text);

}  // namespace ucg
