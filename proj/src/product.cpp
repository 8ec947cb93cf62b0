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

#include "ucg/product.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "ucg/canonical.hpp"
#include "ucg/error.hpp"

namespace ucg {
namespace {

constexpr std::array<std::array<int, 3>, 6> kBijections = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

std::array<Vertex, 3> sorted_neighbors(const CubicGraph& g, Vertex v) {
  auto nb = g.neighbors(v);
  std::sort(nb.begin(), nb.end());
  return nb;
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<Vertex> orbit_representatives(const CubicGraph& g) {
  const auto orbit = vertex_orbits(g);
  std::vector<Vertex> reps;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (orbit[v] == v) reps.push_back(v);
  }
  return reps;
}

const CubicGraph& p92() {
  static const CubicGraph g = generalized_petersen({9, 2});
  return g;
}

struct Candidate {
  std::size_t left = 0;   // index into the host list
  std::size_t right = 0;  // index into the guest list
  StarProductSpec spec;
};

// Every composition host x guest up to automorphisms of either factor; the
// result is the first candidate (in enumeration order) of each isomorphism
// class, keyed by canonical form.
std::map<std::string, Candidate> compose_classes(
    const std::vector<const CubicGraph*>& hosts,
    const std::vector<const CubicGraph*>& guests, int threads) {
  std::vector<std::vector<Vertex>> host_reps, guest_reps;
  for (const auto* g : hosts) host_reps.push_back(orbit_representatives(*g));
  for (const auto* g : guests) guest_reps.push_back(orbit_representatives(*g));

  std::vector<Candidate> candidates;
  for (std::size_t h = 0; h < hosts.size(); ++h) {
    for (std::size_t q = 0; q < guests.size(); ++q) {
      for (Vertex v1 : host_reps[h]) {
        for (Vertex v2 : guest_reps[q]) {
          for (int perm = 0; perm < 6; ++perm) {
            candidates.push_back({h, q, {v1, v2, perm}});
          }
        }
      }
    }
  }
  std::vector<std::string> forms(candidates.size());
  parallel_for(candidates.size(), threads, [&](std::size_t i) {
    const Candidate& c = candidates[i];
    forms[i] = canonical_form(
                   star_compose(*hosts[c.left], *guests[c.right], c.spec).graph)
                   .graph6;
  });
  std::map<std::string, Candidate> classes;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    classes.try_emplace(forms[i], candidates[i]);
  }
  return classes;
}

}  // namespace

const std::array<int, 3>& bijection_of(int perm) {
  if (perm < 0 || perm >= 6) {
    throw DomainError("bijection index must be in 0..5, got " + std::to_string(perm));
  }
  return kBijections[perm];
}

StarProduct star_compose(const CubicGraph& g1, const CubicGraph& g2,
                         const StarProductSpec& spec) {
  const auto& bij = bijection_of(spec.perm);
  if (spec.v1 < 0 || spec.v1 >= g1.order() || spec.v2 < 0 || spec.v2 >= g2.order()) {
    throw DomainError("star product vertex out of range");
  }
  const auto x = sorted_neighbors(g1, spec.v1);
  const auto y = sorted_neighbors(g2, spec.v2);

  std::vector<Vertex> vmap1(g1.order(), -1), vmap2(g2.order(), -1);
  Vertex next = 0;
  for (Vertex v = 0; v < g1.order(); ++v) {
    if (v != spec.v1) vmap1[v] = next++;
  }
  for (Vertex v = 0; v < g2.order(); ++v) {
    if (v != spec.v2) vmap2[v] = next++;
  }

  std::vector<Edge> edges;
  edges.reserve(g1.size() + g2.size() - 3);
  std::vector<EdgeId> emap1(g1.size(), -1), emap2(g2.size(), -1);
  for (EdgeId e = 0; e < g1.size(); ++e) {
    const Edge& ed = g1.edge(e);
    if (ed.u == spec.v1 || ed.v == spec.v1) continue;
    emap1[e] = static_cast<EdgeId>(edges.size());
    edges.push_back({vmap1[ed.u], vmap1[ed.v]});
  }
  for (EdgeId e = 0; e < g2.size(); ++e) {
    const Edge& ed = g2.edge(e);
    if (ed.u == spec.v2 || ed.v == spec.v2) continue;
    emap2[e] = static_cast<EdgeId>(edges.size());
    edges.push_back({vmap2[ed.u], vmap2[ed.v]});
  }
  std::array<EdgeId, 3> matching{};
  for (int i = 0; i < 3; ++i) {
    const Vertex a = x[i];
    const Vertex b = y[bij[i]];
    matching[i] = static_cast<EdgeId>(edges.size());
    emap1[*g1.find_edge(spec.v1, a)] = matching[i];
    emap2[*g2.find_edge(spec.v2, b)] = matching[i];
    edges.push_back({vmap1[a], vmap2[b]});
  }
  // Disjoint factors cannot produce parallel edges; the constructor would
  // reject them anyway.
  CubicGraph graph(next, std::move(edges));
  std::vector<Vertex> first(g1.order() - 1);
  std::iota(first.begin(), first.end(), 0);
  auto cut = make_cut_between(graph, first);
  return {std::move(graph), std::move(*cut), std::move(vmap1), std::move(vmap2),
          std::move(emap1), std::move(emap2)};
}

std::pair<CubicGraph, CubicGraph> star_decompose(const CubicGraph& g,
                                                 const EdgeCut3& cut) {
  // Recorded sides are trusted only if they induce exactly these edges.
  auto sorted_edges = cut.edges;
  std::sort(sorted_edges.begin(), sorted_edges.end());
  const auto checked =
      cut.side_a.empty() ? make_cut(g, cut.edges) : make_cut_between(g, cut.side_a);
  if (!checked || checked->edges != sorted_edges) {
    throw DomainError("edges do not form a 3-edge cut");
  }
  if (!checked->nontrivial) throw DomainError("cannot decompose along a trivial cut");

  auto contract_side = [&](const std::vector<Vertex>& side) {
    std::vector<Vertex> label(g.order(), -1);
    for (std::size_t i = 0; i < side.size(); ++i) label[side[i]] = static_cast<Vertex>(i);
    const Vertex hub = static_cast<Vertex>(side.size());
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.size(); ++e) {
      if (e == cut.edges[0] || e == cut.edges[1] || e == cut.edges[2]) continue;
      const Edge& ed = g.edge(e);
      if (label[ed.u] >= 0 && label[ed.v] >= 0) edges.push_back({label[ed.u], label[ed.v]});
    }
    for (EdgeId e : checked->edges) {
      const Edge& ed = g.edge(e);
      edges.push_back({hub, label[ed.u] >= 0 ? label[ed.u] : label[ed.v]});
    }
    try {
      return CubicGraph(hub + 1, std::move(edges));
    } catch (const DomainError& err) {
      throw DomainError(std::string("decomposition is not a simple cubic graph: ") +
                        err.what());
    }
  };
  return {contract_side(checked->side_a), contract_side(checked->side_b)};
}

FamilyMember family_base() {
  FamilyMember m{1, p92(), {}, {}, {}};
  for (Vertex v = 0; v < 18; ++v) m.origin.push_back({0, v});
  m.canonical = canonical_form(m.graph).graph6;
  return m;
}

FamilyMember extend_member(const FamilyMember& m, const StarProductSpec& spec) {
  StarProduct p = star_compose(m.graph, p92(), spec);
  FamilyMember out{m.k + 1, std::move(p.graph), m.trace, {}, {}};
  out.trace.push_back(spec);
  out.origin.resize(out.graph.order());
  for (Vertex v = 0; v < m.graph.order(); ++v) {
    if (p.vertex_map1[v] >= 0) out.origin[p.vertex_map1[v]] = m.origin[v];
  }
  for (Vertex v = 0; v < 18; ++v) {
    if (p.vertex_map2[v] >= 0) out.origin[p.vertex_map2[v]] = {m.k, v};
  }
  out.canonical = canonical_form(out.graph).graph6;
  return out;
}

FamilyMember replay_trace(const std::vector<StarProductSpec>& trace) {
  FamilyMember m = family_base();
  for (const auto& spec : trace) m = extend_member(m, spec);
  return m;
}

std::vector<FamilyMember> generate_family(int k, int threads) {
  if (k < 1) throw ParameterError("family size k must be at least 1");
  if (k > kFamilyGuard) {
    throw ResourceError("family generation is limited to k <= " +
                        std::to_string(kFamilyGuard));
  }
  std::vector<FamilyMember> level{family_base()};
  const std::vector<const CubicGraph*> guest{&p92()};
  for (int j = 2; j <= k; ++j) {
    std::vector<const CubicGraph*> hosts;
    for (const auto& m : level) hosts.push_back(&m.graph);
    const auto classes = compose_classes(hosts, guest, threads);
    std::vector<FamilyMember> next;
    next.reserve(classes.size());
    for (const auto& [form, c] : classes) {
      next.push_back(extend_member(level[c.left], c.spec));
    }
    level = std::move(next);
  }
  return level;
}

std::set<std::string> family_forms_all_trees(int k, int threads) {
  if (k < 1) throw ParameterError("family size k must be at least 1");
  if (k > kFamilyGuard) {
    throw ResourceError("family generation is limited to k <= " +
                        std::to_string(kFamilyGuard));
  }
  std::vector<std::vector<CubicGraph>> by_size(k + 1);
  by_size[1].push_back(p92());
  for (int j = 2; j <= k; ++j) {
    std::set<std::string> seen;
    for (int a = j - 1; a >= (j + 1) / 2; --a) {
      std::vector<const CubicGraph*> hosts, guests;
      for (const auto& g : by_size[a]) hosts.push_back(&g);
      for (const auto& g : by_size[j - a]) guests.push_back(&g);
      for (const auto& [form, c] : compose_classes(hosts, guests, threads)) {
        if (seen.insert(form).second) {
          by_size[j].push_back(star_compose(*hosts[c.left], *guests[c.right], c.spec).graph);
        }
      }
    }
    if (j == k) return seen;
  }
  return {canonical_form(p92()).graph6};
}

}  // namespace ucg
