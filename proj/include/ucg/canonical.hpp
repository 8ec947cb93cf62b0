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

#include <string>
#include <vector>

#include "ucg/graph.hpp"

namespace ucg {

// `graph6` is the graph6 string of the canonically relabeled graph, so equal
// strings mean isomorphic graphs. relabel(g, labeling) reproduces it.
struct CanonicalForm {
  std::string graph6;
  std::vector<Vertex> labeling;  // old vertex -> canonical label
};

// Ordered color refinement, then individualization of every vertex of the
// first non-singleton cell, recursively; the leaf with the smallest graph6
// string wins. The whole tree is explored.
CanonicalForm canonical_form(const CubicGraph& g);

bool are_isomorphic(const CubicGraph& a, const CubicGraph& b);

// Automorphism orbit of each vertex, named by its smallest member.
std::vector<Vertex> vertex_orbits(const CubicGraph& g);

}  // namespace ucg
