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

#include "ucg/coloring.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "ucg/error.hpp"

namespace ucg {
namespace {

constexpr std::array<std::array<Color, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

// Edges in the order a DFS from vertex 0 first touches them, so that every
// prefix of the order stays close to a connected frontier.
std::vector<EdgeId> dfs_edge_order(const CubicGraph& g) {
  std::vector<EdgeId> order;
  std::vector<char> seen_edge(g.size(), 0);
  std::vector<char> seen_vertex(g.order(), 0);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen_vertex[root]) continue;
    std::vector<Vertex> stack{root};
    seen_vertex[root] = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        if (seen_edge[e]) continue;
        seen_edge[e] = 1;
        order.push_back(e);
        const Vertex y = g.other(e, x);
        if (!seen_vertex[y]) {
          seen_vertex[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return order;
}

// Backtracking over edges with forced-move propagation: once a vertex has two
// colored edges, its third edge can only take the missing color.
class ColoringSearch {
 public:
  // Return false from the visitor to stop the search.
  using Visitor = std::function<bool(const std::vector<int>&)>;

  explicit ColoringSearch(const CubicGraph& g)
      : g_(g), order_(dfs_edge_order(g)), color_(g.size(), -1), mask_(g.order(), 0) {}

  // Colors the star of vertex 0 with 0, 1, 2 in incidence order; every
  // partition then has exactly one representative among the solutions.
  bool fix_root_star() {
    for (int i = 0; i < 3; ++i) {
      const EdgeId e = g_.incident(0)[i];
      if (color_[e] >= 0) continue;
      if (!assign(e, static_cast<int>(i))) return false;
    }
    return true;
  }

  // Returns false if the visitor stopped the search.
  bool run(const Visitor& visit) {
    visit_ = &visit;
    return search(0);
  }

 private:
  bool search(std::size_t pos) {
    while (pos < order_.size() && color_[order_[pos]] >= 0) ++pos;
    if (pos == order_.size()) return (*visit_)(color_);
    const EdgeId e = order_[pos];
    const Edge& ed = g_.edge(e);
    const int used = mask_[ed.u] | mask_[ed.v];
    for (int c = 0; c < 3; ++c) {
      if (used & (1 << c)) continue;
      const std::size_t mark = trail_.size();
      if (assign(e, c) && !search(pos + 1)) {
        undo(mark);
        return false;
      }
      undo(mark);
    }
    return true;
  }

  // Assigns and propagates; false on conflict (the trail still records what
  // was set so that undo restores it).
  bool assign(EdgeId e, int c) {
    std::vector<std::pair<EdgeId, int>> pending{{e, c}};
    while (!pending.empty()) {
      auto [f, col] = pending.back();
      pending.pop_back();
      if (color_[f] >= 0) {
        if (color_[f] != col) return false;
        continue;
      }
      const Edge& ed = g_.edge(f);
      const int bit = 1 << col;
      if ((mask_[ed.u] | mask_[ed.v]) & bit) return false;
      color_[f] = col;
      mask_[ed.u] |= bit;
      mask_[ed.v] |= bit;
      trail_.push_back(f);
      for (Vertex x : {ed.u, ed.v}) {
        if (std::popcount(static_cast<unsigned>(mask_[x])) != 2) continue;
        const int missing = std::countr_zero(static_cast<unsigned>(~mask_[x] & 7));
        for (EdgeId h : g_.incident(x)) {
          if (color_[h] < 0) pending.push_back({h, missing});
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const EdgeId f = trail_.back();
      trail_.pop_back();
      const Edge& ed = g_.edge(f);
      const int bit = 1 << color_[f];
      mask_[ed.u] &= ~bit;
      mask_[ed.v] &= ~bit;
      color_[f] = -1;
    }
  }

  const CubicGraph& g_;
  std::vector<EdgeId> order_;
  std::vector<int> color_;
  std::vector<int> mask_;
  std::vector<EdgeId> trail_;
  const Visitor* visit_ = nullptr;
};

EdgeColoring to_coloring(const std::vector<int>& raw) {
  EdgeColoring c;
  c.colors.assign(raw.begin(), raw.end());
  return c;
}

void require_connected(const CubicGraph& g) {
  if (!is_connected(g)) {
    throw DomainError("coloring counts are defined for connected graphs only");
  }
}

}  // namespace

bool is_proper(const CubicGraph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.size()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    int mask = 0;
    for (EdgeId e : g.incident(v)) {
      if (c.colors[e] > 2) return false;
      mask |= 1 << c.colors[e];
    }
    if (mask != 7) return false;
  }
  return true;
}

EdgeColoring permute_colors(const EdgeColoring& c, const std::array<Color, 3>& perm) {
  EdgeColoring out = c;
  for (Color& x : out.colors) x = perm[x];
  return out;
}

EdgeColoring partition_normal_form(const EdgeColoring& c) {
  std::array<int, 3> rename = {-1, -1, -1};
  Color next = 0;
  EdgeColoring out = c;
  for (Color& x : out.colors) {
    if (rename[x] < 0) rename[x] = next++;
    x = static_cast<Color>(rename[x]);
  }
  return out;
}

bool same_partition(const EdgeColoring& a, const EdgeColoring& b) {
  for (const auto& perm : kPermutations) {
    if (permute_colors(a, perm) == b) return true;
  }
  return false;
}

std::vector<EdgeColoring> enumerate_partitions(const CubicGraph& g) {
  std::vector<EdgeColoring> out;
  ColoringSearch search(g);
  if (search.fix_root_star()) {
    search.run([&](const std::vector<int>& raw) {
      out.push_back(partition_normal_form(to_coloring(raw)));
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeColoring> enumerate_edge_colorings(const CubicGraph& g) {
  std::vector<EdgeColoring> out;
  ColoringSearch search(g);
  if (search.fix_root_star()) {
    search.run([&](const std::vector<int>& raw) {
      const EdgeColoring base = to_coloring(raw);
      for (const auto& perm : kPermutations) out.push_back(permute_colors(base, perm));
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

ColoringCount count_colorings(const CubicGraph& g) {
  require_connected(g);
  std::uint64_t partitions = 0;
  ColoringSearch search(g);
  if (search.fix_root_star()) {
    search.run([&](const std::vector<int>&) {
      ++partitions;
      return true;
    });
  }
  return {6 * partitions, partitions};
}

bool is_uniquely_3_edge_colorable(const CubicGraph& g) {
  require_connected(g);
  int found = 0;
  ColoringSearch search(g);
  if (search.fix_root_star()) {
    search.run([&](const std::vector<int>&) { return ++found < 2; });
  }
  return found == 1;
}

std::vector<KempeChain> kempe_cycles(const CubicGraph& g, const EdgeColoring& c,
                                     ColorPair pair) {
  if (!is_proper(g, c)) throw DomainError("coloring is not proper");
  if (pair.first == pair.second || pair.first > 2 || pair.second > 2) {
    throw DomainError("Kempe chains need two distinct colors in {0,1,2}");
  }
  auto edge_of_color = [&](Vertex v, Color col) {
    for (EdgeId e : g.incident(v)) {
      if (c.colors[e] == col) return e;
    }
    return -1;  // unreachable for proper colorings
  };
  std::vector<KempeChain> chains;
  std::vector<char> seen(g.order(), 0);
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    KempeChain chain;
    chain.pair = pair;
    Vertex x = start;
    Color col = pair.first;
    do {
      seen[x] = 1;
      const EdgeId e = edge_of_color(x, col);
      chain.vertices.push_back(x);
      chain.edges.push_back(e);
      x = g.other(e, x);
      col = col == pair.first ? pair.second : pair.first;
    } while (x != start);
    chains.push_back(std::move(chain));
  }
  return chains;
}

EdgeColoring kempe_switch(const CubicGraph& g, const EdgeColoring& c,
                          const KempeChain& chain) {
  const auto components = kempe_cycles(g, c, chain.pair);
  const std::set<EdgeId> wanted(chain.edges.begin(), chain.edges.end());
  const bool is_component =
      wanted.size() == chain.edges.size() &&
      std::any_of(components.begin(), components.end(), [&](const KempeChain& k) {
        return std::set<EdgeId>(k.edges.begin(), k.edges.end()) == wanted;
      });
  if (!is_component) {
    throw DomainError("chain is not a Kempe component of the coloring");
  }
  EdgeColoring out = c;
  for (EdgeId e : chain.edges) {
    out.colors[e] = out.colors[e] == chain.pair.first ? chain.pair.second
                                                      : chain.pair.first;
  }
  return out;
}

}  // namespace ucg
