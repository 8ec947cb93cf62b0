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

#include "ucg/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "ucg/error.hpp"

namespace ucg {

CubicGraph::CubicGraph(int order, std::vector<Edge> edges)
    : order_(order), edges_(std::move(edges)) {
  if (order_ <= 0 || order_ % 2 != 0) {
    throw DomainError("cubic graph needs a positive even order, got " +
                      std::to_string(order_));
  }
  std::vector<int> degree(order_, 0);
  incident_.assign(order_, {-1, -1, -1});
  for (EdgeId e = 0; e < size(); ++e) {
    Edge& ed = edges_[e];
    if (ed.u < 0 || ed.v < 0 || ed.u >= order_ || ed.v >= order_) {
      throw DomainError("edge " + std::to_string(e) + " has an endpoint outside 0.." +
                        std::to_string(order_ - 1));
    }
    if (ed.u == ed.v) {
      throw DomainError("loop at vertex " + std::to_string(ed.u));
    }
    if (ed.u > ed.v) std::swap(ed.u, ed.v);
    for (Vertex x : {ed.u, ed.v}) {
      if (degree[x] == 3) {
        throw DomainError("vertex " + std::to_string(x) +
                          " has degree greater than 3");
      }
      incident_[x][degree[x]++] = e;
    }
  }
  for (Vertex x = 0; x < order_; ++x) {
    if (degree[x] != 3) {
      throw DomainError("vertex " + std::to_string(x) + " has degree " +
                        std::to_string(degree[x]) + ", expected 3");
    }
    const auto nb = neighbors(x);
    if (nb[0] == nb[1] || nb[0] == nb[2] || nb[1] == nb[2]) {
      throw DomainError("parallel edges at vertex " + std::to_string(x));
    }
  }
}

std::array<Vertex, 3> CubicGraph::neighbors(Vertex v) const {
  const auto& inc = incident_[v];
  return {other(inc[0], v), other(inc[1], v), other(inc[2], v)};
}

std::optional<EdgeId> CubicGraph::find_edge(Vertex a, Vertex b) const {
  for (EdgeId e : incident_[a]) {
    if (other(e, a) == b) return e;
  }
  return std::nullopt;
}

CubicGraph generalized_petersen(GeneralizedPetersenParams params) {
  const int m = params.m;
  const int k = params.k;
  if (m < 3 || k < 1 || 2 * k >= m) {
    throw ParameterError("P(m,k) needs m >= 3 and 1 <= k < m/2, got P(" +
                         std::to_string(m) + "," + std::to_string(k) + ")");
  }
  std::vector<Edge> edges;
  edges.reserve(3 * m);
  for (int i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m});
  for (int i = 0; i < m; ++i) edges.push_back({i, m + i});
  for (int i = 0; i < m; ++i) edges.push_back({m + i, m + (i + k) % m});
  return CubicGraph(2 * m, std::move(edges));
}

CubicGraph tutte_p92() {
  std::vector<Edge> edges;
  for (int i = 0; i < 9; ++i) edges.push_back({i, (i + 1) % 9});
  for (int i = 0; i < 9; ++i) edges.push_back({9 + i, 9 + (i + 1) % 9});
  for (int i = 0; i < 9; ++i) edges.push_back({i, 9 + (2 * i) % 9});
  return CubicGraph(18, std::move(edges));
}

CubicGraph complete_k4() {
  return CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

CubicGraph complete_bipartite_k33() {
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) edges.push_back({a, b});
  }
  return CubicGraph(6, std::move(edges));
}

CubicGraph triangular_prism() { return generalized_petersen({3, 1}); }

CubicGraph petersen_graph() { return generalized_petersen({5, 2}); }

CubicGraph moebius_ladder(int n) {
  if (n < 4 || n % 2 != 0) {
    throw ParameterError("Möbius ladder needs an even n >= 4");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (int i = 0; i < n / 2; ++i) edges.push_back({i, i + n / 2});
  return CubicGraph(n, std::move(edges));
}

CubicGraph relabel(const CubicGraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw DomainError("permutation size does not match graph order");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return CubicGraph(g.order(), std::move(edges));
}

int components_without(const CubicGraph& g, std::span<const char> removed,
                       std::vector<int>& component) {
  component.assign(g.order(), -1);
  std::vector<Vertex> stack;
  int count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (component[s] >= 0) continue;
    component[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        if (!removed.empty() && removed[e]) continue;
        const Vertex y = g.other(e, x);
        if (component[y] < 0) {
          component[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return count;
}

bool is_connected(const CubicGraph& g) {
  std::vector<int> component;
  return components_without(g, {}, component) == 1;
}

int girth(const CubicGraph& g) {
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(g.order());
  std::vector<EdgeId> via(g.order());
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    via[root] = -1;
    queue.assign(1, root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (2 * dist[x] + 1 >= best) break;
      for (EdgeId e : g.incident(x)) {
        if (e == via[x]) continue;
        const Vertex y = g.other(e, x);
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          via[y] = e;
          queue.push_back(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

bool is_triangle_free(const CubicGraph& g) { return girth(g) > 3; }

namespace {

bool side_has_cycle(const CubicGraph& g, const std::vector<int>& component,
                    int side, int side_vertices) {
  int inside = 0;
  for (const Edge& e : g.edges()) {
    if (component[e.u] == side && component[e.v] == side) ++inside;
  }
  return inside >= side_vertices;
}

EdgeCut3 cut_from_components(const CubicGraph& g, std::array<EdgeId, 3> edges,
                             const std::vector<int>& component) {
  EdgeCut3 cut;
  cut.edges = edges;
  std::sort(cut.edges.begin(), cut.edges.end());
  for (Vertex v = 0; v < g.order(); ++v) {
    (component[v] == component[0] ? cut.side_a : cut.side_b).push_back(v);
  }
  const int other = cut.side_b.empty() ? -1 : component[cut.side_b.front()];
  cut.nontrivial =
      side_has_cycle(g, component, component[0], static_cast<int>(cut.side_a.size())) &&
      side_has_cycle(g, component, other, static_cast<int>(cut.side_b.size()));
  return cut;
}

}  // namespace

std::optional<EdgeCut3> make_cut(const CubicGraph& g, std::array<EdgeId, 3> edges) {
  std::vector<char> removed(g.size(), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.size()) throw DomainError("cut edge out of range");
    removed[e] = 1;
  }
  if (edges[0] == edges[1] || edges[0] == edges[2] || edges[1] == edges[2]) {
    throw DomainError("cut edges must be distinct");
  }
  std::vector<int> component;
  if (components_without(g, removed, component) != 2) return std::nullopt;
  return cut_from_components(g, edges, component);
}

std::optional<EdgeCut3> make_cut_between(const CubicGraph& g, std::span<const Vertex> side) {
  std::vector<int> component(g.order(), 1);
  for (Vertex v : side) {
    if (v < 0 || v >= g.order()) throw DomainError("cut side vertex out of range");
    component[v] = 0;
  }
  std::vector<EdgeId> crossing;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (component[g.edge(e).u] != component[g.edge(e).v]) crossing.push_back(e);
  }
  const auto in_side = std::count(component.begin(), component.end(), 0);
  if (crossing.size() != 3 || in_side == 0 || in_side == g.order()) return std::nullopt;
  return cut_from_components(g, {crossing[0], crossing[1], crossing[2]}, component);
}

std::vector<EdgeCut3> enumerate_3_edge_cuts(const CubicGraph& g,
                                            bool nontrivial_only) {
  std::vector<EdgeCut3> cuts;
  std::vector<char> removed(g.size(), 0);
  std::vector<int> component;
  const int m = g.size();
  for (EdgeId a = 0; a < m; ++a) {
    removed[a] = 1;
    for (EdgeId b = a + 1; b < m; ++b) {
      removed[b] = 1;
      for (EdgeId c = b + 1; c < m; ++c) {
        removed[c] = 1;
        if (components_without(g, removed, component) == 2) {
          EdgeCut3 cut = cut_from_components(g, {a, b, c}, component);
          if (!nontrivial_only || cut.nontrivial) cuts.push_back(std::move(cut));
        }
        removed[c] = 0;
      }
      removed[b] = 0;
    }
    removed[a] = 0;
  }
  return cuts;
}

}  // namespace ucg
