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

#include "ucg/embedding.hpp"

#include <algorithm>
#include <deque>

#include "ucg/error.hpp"
#include "ucg/subdivision.hpp"

namespace ucg {
namespace {

int slot_of(const std::array<EdgeId, 3>& rot, EdgeId e) {
  for (int i = 0; i < 3; ++i) {
    if (rot[i] == e) return i;
  }
  return -1;
}

// Face-tracing states: leave vertex v along edge e with local orientation o.
// Encoded as ((2 * e + (v is the larger endpoint)) * 2 + (o < 0)).
class StateCodec {
 public:
  explicit StateCodec(const CubicGraph& g) : g_(g) {}

  int encode(Vertex v, EdgeId e, int o) const {
    return ((2 * e + (g_.edge(e).u == v ? 0 : 1)) * 2) + (o < 0 ? 1 : 0);
  }
  Vertex vertex(int st) const {
    const Edge& ed = g_.edge(edge(st));
    return ((st >> 1) & 1) ? ed.v : ed.u;
  }
  EdgeId edge(int st) const { return st >> 2; }
  int orientation(int st) const { return (st & 1) ? -1 : 1; }

 private:
  const CubicGraph& g_;
};

EdgeId next_edge(const EmbeddingScheme& s, Vertex w, EdgeId arrived, int o) {
  const auto& rot = s.rotation[w];
  const int j = slot_of(rot, arrived);
  return o > 0 ? rot[(j + 1) % 3] : rot[(j + 2) % 3];
}

std::vector<EdgeId> bfs_edge_order(const CubicGraph& g) {
  std::vector<EdgeId> order;
  std::vector<char> seen_edge(g.size(), 0), seen_vertex(g.order(), 0);
  std::deque<Vertex> queue{0};
  seen_vertex[0] = 1;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(x)) {
      if (seen_edge[e]) continue;
      seen_edge[e] = 1;
      order.push_back(e);
      const Vertex y = g.other(e, x);
      if (!seen_vertex[y]) {
        seen_vertex[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return order;
}

void require_search_size(const CubicGraph& g) {
  if (g.order() > kEmbeddingSearchGuard) {
    throw ResourceError("embedding search is limited to " +
                        std::to_string(kEmbeddingSearchGuard) + " vertices, got " +
                        std::to_string(g.order()));
  }
  if (!is_connected(g)) throw DomainError("embedding search needs a connected graph");
}

// Depth-first search over edge signs with all rotations fixed. A partial
// assignment already determines some closed faces; the rest of the 2E edge
// sides can form at most (remaining / girth) further faces.
class SignSearch {
 public:
  SignSearch(const CubicGraph& g, int target_faces)
      : g_(g),
        codec_(g),
        scheme_(default_scheme(g)),
        order_(bfs_edge_order(g)),
        target_(target_faces),
        girth_(girth(g)),
        mark_(4 * g.size(), 0) {
    std::fill(scheme_.signs.begin(), scheme_.signs.end(), 0);
  }

  std::optional<EmbeddingScheme> run() {
    if (search(0)) return scheme_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t pos) {
    const auto [closed, used] = closed_faces();
    if (pos == order_.size()) return closed == target_;
    const int remaining = 2 * g_.size() - used;
    if (closed + remaining / girth_ < target_) return false;
    const EdgeId e = order_[pos];
    for (int sign : {1, -1}) {
      scheme_.signs[e] = sign;
      if (search(pos + 1)) return true;
    }
    scheme_.signs[e] = 0;
    return false;
  }

  std::pair<int, int> closed_faces() {
    ++stamp_;
    int closed = 0;
    int used = 0;
    const int states = 4 * g_.size();
    for (int start = 0; start < states; ++start) {
      if (mark_[start] == stamp_ || scheme_.signs[codec_.edge(start)] == 0) continue;
      int cur = start;
      int len = 0;
      bool is_closed = false;
      walk_.clear();
      while (true) {
        if (mark_[cur] == stamp_) {
          is_closed = cur == start && len > 0;
          break;
        }
        mark_[cur] = stamp_;
        walk_.push_back(cur);
        const EdgeId e = codec_.edge(cur);
        const Vertex v = codec_.vertex(cur);
        const Vertex w = g_.other(e, v);
        const int o = codec_.orientation(cur) * scheme_.signs[e];
        ++len;
        const EdgeId f = next_edge(scheme_, w, e, o);
        if (scheme_.signs[f] == 0) break;
        cur = codec_.encode(w, f, o);
      }
      if (!is_closed) continue;
      ++closed;
      used += len;
      for (int st : walk_) {
        const EdgeId e = codec_.edge(st);
        const Vertex w = g_.other(e, codec_.vertex(st));
        mark_[codec_.encode(w, e, -codec_.orientation(st) * scheme_.signs[e])] = stamp_;
      }
    }
    return {closed, used};
  }

  const CubicGraph& g_;
  StateCodec codec_;
  EmbeddingScheme scheme_;
  std::vector<EdgeId> order_;
  int target_;
  int girth_;
  std::vector<int> mark_;
  int stamp_ = 0;
  std::vector<int> walk_;
};

}  // namespace

void validate_scheme(const CubicGraph& g, const EmbeddingScheme& s) {
  if (static_cast<int>(s.rotation.size()) != g.order() ||
      static_cast<int>(s.signs.size()) != g.size()) {
    throw DomainError("embedding scheme does not match the graph size");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    auto a = s.rotation[v];
    auto b = g.incident(v);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      throw DomainError("rotation at vertex " + std::to_string(v) +
                        " does not list its incident edges");
    }
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (s.signs[e] != 1 && s.signs[e] != -1) {
      throw DomainError("edge " + std::to_string(e) + " has a sign other than +1/-1");
    }
  }
}

EmbeddingScheme default_scheme(const CubicGraph& g) {
  EmbeddingScheme s;
  for (Vertex v = 0; v < g.order(); ++v) s.rotation.push_back(g.incident(v));
  s.signs.assign(g.size(), 1);
  return s;
}

EmbeddingScheme rotation_scheme(const CubicGraph& g, std::uint64_t mask) {
  EmbeddingScheme s = default_scheme(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((mask >> v) & 1) std::swap(s.rotation[v][1], s.rotation[v][2]);
  }
  return s;
}

void switch_vertex(const CubicGraph& g, EmbeddingScheme& s, Vertex v) {
  std::swap(s.rotation[v][1], s.rotation[v][2]);
  for (EdgeId e : g.incident(v)) s.signs[e] = -s.signs[e];
}

bool is_orientable_scheme(const CubicGraph& g, const EmbeddingScheme& s) {
  std::vector<int> parity(g.order(), 0);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (parity[root] != 0) continue;
    parity[root] = 1;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        const Vertex y = g.other(e, x);
        const int want = parity[x] * s.signs[e];
        if (parity[y] == 0) {
          parity[y] = want;
          stack.push_back(y);
        } else if (parity[y] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

FaceTraceResult face_trace(const CubicGraph& g, const EmbeddingScheme& s) {
  validate_scheme(g, s);
  const StateCodec codec(g);
  const int states = 4 * g.size();
  std::vector<char> marked(states, 0);
  FaceTraceResult result;
  // Positive-orientation states first so all-positive schemes trace their
  // faces in rotation order.
  for (int o : {1, -1}) {
    for (int dart = 0; dart < 2 * g.size(); ++dart) {
      const int start = dart * 2 + (o < 0 ? 1 : 0);
      if (marked[start]) continue;
      Face face;
      int cur = start;
      do {
        if (marked[cur]) throw DomainError("face tracing revisited a state");
        marked[cur] = 1;
        const EdgeId e = codec.edge(cur);
        const Vertex v = codec.vertex(cur);
        const Vertex w = g.other(e, v);
        const int arrive = codec.orientation(cur) * s.signs[e];
        marked[codec.encode(w, e, -arrive)] = 1;
        face.vertices.push_back(v);
        face.edges.push_back(e);
        cur = codec.encode(w, next_edge(s, w, e, arrive), arrive);
      } while (cur != start);
      result.faces.push_back(std::move(face));
    }
  }
  const int faces = static_cast<int>(result.faces.size());
  result.euler_genus = 2 - g.order() + g.size() - faces;
  result.orientable = is_orientable_scheme(g, s);
  return result;
}

GenusWitness min_orientable_genus_exhaustive(const CubicGraph& g) {
  require_search_size(g);
  const int n = g.order();
  const int lower = find_k33_subdivision(g, {}) ? 1 : 0;

  // Dart (v, i) leaves v along incident(v)[i] and arrives at slot arrive[.]
  // of the other end.
  std::vector<int> arrive_vertex(3 * n), arrive_slot(3 * n);
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < 3; ++i) {
      const EdgeId e = g.incident(v)[i];
      const Vertex w = g.other(e, v);
      arrive_vertex[3 * v + i] = w;
      arrive_slot[3 * v + i] = slot_of(g.incident(w), e);
    }
  }
  std::vector<std::uint32_t> seen(3 * n, 0);
  std::uint32_t stamp = 0;
  auto count_faces = [&](std::uint64_t mask) {
    ++stamp;
    int faces = 0;
    for (int d = 0; d < 3 * n; ++d) {
      if (seen[d] == stamp) continue;
      ++faces;
      int cur = d;
      while (seen[cur] != stamp) {
        seen[cur] = stamp;
        const Vertex w = arrive_vertex[cur];
        const int j = arrive_slot[cur];
        cur = 3 * w + (((mask >> w) & 1) ? (j + 2) % 3 : (j + 1) % 3);
      }
    }
    return faces;
  };

  int best = -1;
  std::uint64_t best_mask = 0;
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const std::uint64_t mask = bits << 1;
    const int genus = (2 - n + g.size() - count_faces(mask)) / 2;
    if (best < 0 || genus < best) {
      best = genus;
      best_mask = mask;
      if (best == lower) break;
    }
  }
  GenusWitness out{best, rotation_scheme(g, best_mask)};
  if (face_trace(g, out.witness).euler_genus != 2 * best) {
    throw DomainError("genus witness failed face-trace verification");
  }
  return out;
}

std::optional<EmbeddingScheme> projective_planar_search(const CubicGraph& g) {
  require_search_size(g);
  SignSearch search(g, g.size() - g.order() + 1);
  auto found = search.run();
  if (found) {
    const auto trace = face_trace(g, *found);
    if (trace.euler_genus != 1 || trace.orientable) {
      throw DomainError("projective witness failed face-trace verification");
    }
  }
  return found;
}

EmbeddingScheme merge_embeddings(const CubicGraph& g1, const EmbeddingScheme& e1,
                                 const CubicGraph& g2, const EmbeddingScheme& e2,
                                 const StarProductSpec& spec) {
  const auto t1 = face_trace(g1, e1);
  const auto t2 = face_trace(g2, e2);
  const StarProduct p = star_compose(g1, g2, spec);

  auto build = [&](bool mirror_guest) {
    // Make the three edges at v_i positive so the disc around v_i carries a
    // single local orientation.
    EmbeddingScheme s1 = e1;
    for (EdgeId e : g1.incident(spec.v1)) {
      if (s1.signs[e] < 0) switch_vertex(g1, s1, g1.other(e, spec.v1));
    }
    EmbeddingScheme s2 = e2;
    for (EdgeId e : g2.incident(spec.v2)) {
      if (s2.signs[e] < 0) switch_vertex(g2, s2, g2.other(e, spec.v2));
    }
    if (mirror_guest) {
      for (Vertex v = 0; v < g2.order(); ++v) switch_vertex(g2, s2, v);
    }
    EmbeddingScheme out;
    out.rotation.resize(p.graph.order());
    out.signs.assign(p.graph.size(), 1);
    for (Vertex v = 0; v < g1.order(); ++v) {
      if (v == spec.v1) continue;
      for (int i = 0; i < 3; ++i) {
        out.rotation[p.vertex_map1[v]][i] = p.edge_map1[s1.rotation[v][i]];
      }
    }
    for (Vertex v = 0; v < g2.order(); ++v) {
      if (v == spec.v2) continue;
      for (int i = 0; i < 3; ++i) {
        out.rotation[p.vertex_map2[v]][i] = p.edge_map2[s2.rotation[v][i]];
      }
    }
    for (EdgeId e = 0; e < g1.size(); ++e) {
      const Edge& ed = g1.edge(e);
      if (ed.u != spec.v1 && ed.v != spec.v1) out.signs[p.edge_map1[e]] = s1.signs[e];
    }
    for (EdgeId e = 0; e < g2.size(); ++e) {
      const Edge& ed = g2.edge(e);
      if (ed.u != spec.v2 && ed.v != spec.v2) out.signs[p.edge_map2[e]] = s2.signs[e];
    }
    return out;
  };

  // The tube glues the two punctured discs with opposite orientations, so the
  // matching must reverse the cyclic order; one of the two guest mirror
  // images satisfies that.
  const int want = t1.euler_genus + t2.euler_genus;
  for (bool mirror : {false, true}) {
    EmbeddingScheme merged = build(mirror);
    const auto t = face_trace(p.graph, merged);
    if (t.euler_genus == want && t.orientable == (t1.orientable && t2.orientable)) {
      return merged;
    }
  }
  throw DomainError("incompatible spec: no alignment of the matching preserves genus");
}

}  // namespace ucg
