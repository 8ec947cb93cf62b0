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
#include <cstdint>
#include <optional>
#include <vector>

#include "ucg/graph.hpp"
#include "ucg/product.hpp"

namespace ucg {

// General embedding scheme: a cyclic order of the three edges at every vertex
// and a sign per edge. All-positive schemes describe orientable embeddings.
struct EmbeddingScheme {
  std::vector<std::array<EdgeId, 3>> rotation;
  std::vector<int> signs;

  bool operator==(const EmbeddingScheme&) const = default;
};

struct Face {
  std::vector<Vertex> vertices;  // vertices[i] is the tail of edges[i]
  std::vector<EdgeId> edges;
};

struct FaceTraceResult {
  std::vector<Face> faces;
  int euler_genus = 0;
  bool orientable = true;
};

// Largest order accepted by the exhaustive embedding searches.
constexpr int kEmbeddingSearchGuard = 20;

// Throws DomainError unless every rotation lists exactly the incident edges
// of its vertex and every sign is +1 or -1.
void validate_scheme(const CubicGraph& g, const EmbeddingScheme& s);

// All rotations in incidence order, all signs positive.
EmbeddingScheme default_scheme(const CubicGraph& g);
// Bit v of `mask` reverses the rotation at v; signs positive.
EmbeddingScheme rotation_scheme(const CubicGraph& g, std::uint64_t mask);
// Reverses the rotation at v and negates the signs of its edges. The faces
// are unchanged.
void switch_vertex(const CubicGraph& g, EmbeddingScheme& s, Vertex v);

// True iff some set of vertex switches makes every sign positive.
bool is_orientable_scheme(const CubicGraph& g, const EmbeddingScheme& s);

// Traces faces: follow the rotation, and after crossing a negative edge
// follow it in the opposite direction. Euler genus is 2 - V + E - F
// (the graph must be connected).
FaceTraceResult face_trace(const CubicGraph& g, const EmbeddingScheme& s);

struct GenusWitness {
  int genus = 0;
  EmbeddingScheme witness;
};

// Minimum orientable genus over all rotation systems (the rotation at vertex
// 0 is fixed; mirror images have equal genus). Stops early once the lower
// bound is met: 1 when a K3,3 subdivision exists, else 0. Throws
// ResourceError above the order guard.
GenusWitness min_orientable_genus_exhaustive(const CubicGraph& g);

// A nonorientable scheme of Euler genus 1, or nullopt. Rotations are fixed
// to incidence order (every scheme is switching-equivalent to one of these)
// and edge signs are searched depth-first with a face-count bound.
std::optional<EmbeddingScheme> projective_planar_search(const CubicGraph& g);

// Embeds G1 * G2 by deleting v1 and v2 and joining the two punctured
// surfaces by a tube carrying the matching edges. Euler genus adds. The
// result is indexed by star_compose(g1, g2, spec). If the cyclic orders at
// v1 and v2 disagree with the bijection, the guest scheme is mirrored; if
// neither alignment verifies, DomainError("incompatible spec").
EmbeddingScheme merge_embeddings(const CubicGraph& g1, const EmbeddingScheme& e1,
                                 const CubicGraph& g2, const EmbeddingScheme& e2,
                                 const StarProductSpec& spec);

}  // namespace ucg
