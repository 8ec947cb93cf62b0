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

#include "ucg/hamilton.hpp"

#include <algorithm>
#include <functional>

#include "ucg/error.hpp"

namespace ucg {
namespace {

// Grows a path from vertex 0. The first step goes to neighbor `first`, and the
// path may only close through a neighbor of 0 larger than `first`, so each
// cycle is produced once, already in canonical rotation.
class HamiltonSearch {
 public:
  using Visitor = std::function<void(const std::vector<Vertex>&)>;

  HamiltonSearch(const CubicGraph& g, Visitor visit)
      : g_(g), visit_(std::move(visit)), visited_(g.order(), 0), mark_(g.order(), 0) {}

  void run() {
    if (g_.order() < 3) return;
    auto nb = g_.neighbors(0);
    std::sort(nb.begin(), nb.end());
    visited_[0] = 1;
    path_.push_back(0);
    for (int i = 0; i < 2; ++i) {
      first_ = nb[i];
      visited_[first_] = 1;
      path_.push_back(first_);
      if (feasible(0)) extend();
      path_.pop_back();
      visited_[first_] = 0;
    }
  }

 private:
  bool closes_at(Vertex w) const { return w > first_ && g_.adjacent(0, w); }

  void extend() {
    const Vertex end = path_.back();
    if (static_cast<int>(path_.size()) == g_.order()) {
      if (closes_at(end)) visit_(path_);
      return;
    }
    for (Vertex y : g_.neighbors(end)) {
      if (visited_[y]) continue;
      visited_[y] = 1;
      path_.push_back(y);
      if (feasible(end)) extend();
      path_.pop_back();
      visited_[y] = 0;
    }
  }

  // `interior` just stopped being the path end.
  bool feasible(Vertex interior) {
    const Vertex end = path_.back();
    const int remaining = g_.order() - static_cast<int>(path_.size());
    if (remaining == 0) return true;
    // Each unvisited neighbor of the new interior vertex still needs two
    // usable edges: to unvisited vertices, the path end, or a closing edge.
    for (Vertex w : g_.neighbors(interior)) {
      if (!visited_[w] && available_degree(w, end) < 2) return false;
    }
    // Vertex 0 needs a closing neighbor that is not used up.
    bool can_close = false;
    for (Vertex w : g_.neighbors(0)) {
      if (closes_at(w) && (!visited_[w] || w == end)) can_close = true;
    }
    if (!can_close) return false;
    return unvisited_connected(end, remaining);
  }

  int available_degree(Vertex w, Vertex end) const {
    int d = 0;
    for (Vertex y : g_.neighbors(w)) {
      if (!visited_[y] || y == end || (y == 0 && closes_at(w))) ++d;
    }
    return d;
  }

  // All unvisited vertices hang together and touch the path end.
  bool unvisited_connected(Vertex end, int remaining) {
    ++stamp_;
    stack_.clear();
    for (Vertex y : g_.neighbors(end)) {
      if (!visited_[y] && mark_[y] != stamp_) {
        mark_[y] = stamp_;
        stack_.push_back(y);
      }
    }
    int reached = 0;
    while (!stack_.empty()) {
      const Vertex x = stack_.back();
      stack_.pop_back();
      ++reached;
      for (Vertex y : g_.neighbors(x)) {
        if (!visited_[y] && mark_[y] != stamp_) {
          mark_[y] = stamp_;
          stack_.push_back(y);
        }
      }
    }
    return reached == remaining;
  }

  const CubicGraph& g_;
  Visitor visit_;
  std::vector<char> visited_;
  std::vector<int> mark_;
  int stamp_ = 0;
  std::vector<Vertex> stack_;
  std::vector<Vertex> path_;
  Vertex first_ = -1;
};

}  // namespace

HamiltonCycle canonical_cycle(std::span<const Vertex> cyclic) {
  HamiltonCycle h;
  const int n = static_cast<int>(cyclic.size());
  if (n == 0) return h;
  const int at = static_cast<int>(std::min_element(cyclic.begin(), cyclic.end()) -
                                  cyclic.begin());
  const Vertex next = cyclic[(at + 1) % n];
  const Vertex prev = cyclic[(at + n - 1) % n];
  const int step = next < prev ? 1 : n - 1;
  for (int i = 0; i < n; ++i) h.vertices.push_back(cyclic[(at + i * step) % n]);
  return h;
}

bool is_hamilton_cycle(const CubicGraph& g, std::span<const Vertex> cyclic) {
  const int n = g.order();
  if (static_cast<int>(cyclic.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : cyclic) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i) {
    if (!g.adjacent(cyclic[i], cyclic[(i + 1) % n])) return false;
  }
  return true;
}

std::vector<HamiltonCycle> enumerate_hamilton_cycles(const CubicGraph& g) {
  std::vector<HamiltonCycle> out;
  HamiltonSearch search(g, [&](const std::vector<Vertex>& path) {
    out.push_back(HamiltonCycle{path});
  });
  search.run();
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_hamilton_cycles(const CubicGraph& g) {
  std::uint64_t count = 0;
  HamiltonSearch search(g, [&](const std::vector<Vertex>&) { ++count; });
  search.run();
  return count;
}

EdgeColoring coloring_from_hamilton(const CubicGraph& g, const HamiltonCycle& h) {
  if (!is_hamilton_cycle(g, h.vertices)) {
    throw DomainError("vertex sequence is not a Hamilton cycle of the graph");
  }
  EdgeColoring c;
  c.colors.assign(g.size(), 2);
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    c.colors[*g.find_edge(h.vertices[i], h.vertices[(i + 1) % n])] =
        static_cast<Color>(i % 2);
  }
  return c;
}

}  // namespace ucg
