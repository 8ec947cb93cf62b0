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

#include "ucg/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace ucg {
namespace {

// Cells of an ordered partition are named by the index of their first slot,
// so cell[v] == the number of vertices in strictly earlier cells.
class Canonizer {
 public:
  explicit Canonizer(const CubicGraph& g) : g_(g), n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) nbrs_.push_back(g.neighbors(v));
    order_.resize(n_);
    keys_.resize(n_);
  }

  void run() {
    std::vector<int> cell = seed_cells();
    refine(cell);
    search(cell);
  }

  const std::string& best() const { return best_; }
  const std::vector<std::vector<Vertex>>& best_leaves() const { return leaves_; }

 private:
  using Key = std::array<int, 4>;
  static constexpr int kMaxCycle = 8;
  using CycleCounts = std::array<int, kMaxCycle + 1>;

  // Splits cells by the sorted triple of neighbor cells until stable. Cell
  // order depends only on the keys, never on vertex names.
  void refine(std::vector<int>& cell) {
    int cells = count_cells(cell);
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        std::array<int, 3> nc = {cell[nbrs_[v][0]], cell[nbrs_[v][1]], cell[nbrs_[v][2]]};
        std::sort(nc.begin(), nc.end());
        keys_[v] = {cell[v], nc[0], nc[1], nc[2]};
      }
      std::iota(order_.begin(), order_.end(), 0);
      std::sort(order_.begin(), order_.end(),
                [&](Vertex a, Vertex b) { return keys_[a] < keys_[b]; });
      int start = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && keys_[order_[i]] != keys_[order_[i - 1]]) start = i;
        cell[order_[i]] = start;
      }
      const int now = count_cells(cell);
      if (now == cells) return;
      cells = now;
    }
  }

  // Regular graphs are invisible to plain refinement, so the first partition
  // is ordered by the number of short cycles through each vertex.
  std::vector<int> seed_cells() {
    std::vector<CycleCounts> counts(n_);
    std::vector<char> on_path(n_, 0);
    for (Vertex s = 0; s < n_; ++s) {
      counts[s].fill(0);
      on_path[s] = 1;
      walk(s, s, 0, on_path, counts[s]);
      on_path[s] = 0;
    }
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(),
              [&](Vertex a, Vertex b) { return counts[a] < counts[b]; });
    std::vector<int> cell(n_, 0);
    int start = 0;
    for (int i = 0; i < n_; ++i) {
      if (i > 0 && counts[order_[i]] != counts[order_[i - 1]]) start = i;
      cell[order_[i]] = start;
    }
    return cell;
  }

  // counts[l] = closed simple walks of length l from s (each cycle twice).
  void walk(Vertex s, Vertex x, int len, std::vector<char>& on_path, CycleCounts& c) {
    for (Vertex y : nbrs_[x]) {
      if (y == s && len >= 2) ++c[len + 1];
      if (on_path[y] || len + 1 >= kMaxCycle) continue;
      on_path[y] = 1;
      walk(s, y, len + 1, on_path, c);
      on_path[y] = 0;
    }
  }

  int count_cells(const std::vector<int>& cell) const {
    std::vector<char> seen(n_, 0);
    int c = 0;
    for (int x : cell) {
      if (!seen[x]) {
        seen[x] = 1;
        ++c;
      }
    }
    return c;
  }

  void search(const std::vector<int>& cell) {
    std::vector<int> size(n_, 0);
    for (int x : cell) ++size[x];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(cell);
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (cell[v] != target) continue;
      std::vector<int> child = cell;
      for (Vertex w = 0; w < n_; ++w) {
        if (child[w] == target && w != v) child[w] = target + 1;
      }
      refine(child);
      search(child);
    }
  }

  void leaf(const std::vector<int>& labels) {
    std::vector<Edge> edges;
    edges.reserve(g_.size());
    for (const Edge& e : g_.edges()) edges.push_back({labels[e.u], labels[e.v]});
    const std::string code = to_graph6(CubicGraph(n_, std::move(edges)));
    if (leaves_.empty() || code < best_) {
      best_ = code;
      leaves_.clear();
      leaves_.push_back(labels);
    } else if (code == best_) {
      leaves_.push_back(labels);
    }
  }

  const CubicGraph& g_;
  int n_;
  std::vector<std::array<Vertex, 3>> nbrs_;
  std::vector<Vertex> order_;
  std::vector<Key> keys_;
  std::string best_;
  std::vector<std::vector<Vertex>> leaves_;
};

}  // namespace

CanonicalForm canonical_form(const CubicGraph& g) {
  Canonizer c(g);
  c.run();
  return {c.best(), c.best_leaves().front()};
}

bool are_isomorphic(const CubicGraph& a, const CubicGraph& b) {
  if (a.order() != b.order()) return false;
  return canonical_form(a).graph6 == canonical_form(b).graph6;
}

std::vector<Vertex> vertex_orbits(const CubicGraph& g) {
  Canonizer c(g);
  c.run();
  const auto& leaves = c.best_leaves();
  const int n = g.order();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // leaves[i]^-1 o leaves[0] is an automorphism for every i.
  std::vector<Vertex> inverse(n);
  for (const auto& leaf : leaves) {
    for (Vertex v = 0; v < n; ++v) inverse[leaf[v]] = v;
    for (Vertex v = 0; v < n; ++v) {
      const Vertex a = find(v);
      const Vertex b = find(inverse[leaves.front()[v]]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<Vertex> orbit(n);
  for (Vertex v = 0; v < n; ++v) orbit[v] = find(v);
  return orbit;
}

}  // namespace ucg
