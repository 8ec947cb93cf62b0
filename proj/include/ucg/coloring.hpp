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
#include <compare>
#include <cstdint>
#include <vector>

#include "ucg/graph.hpp"

namespace ucg {

using Color = std::uint8_t;

// Edge identifier -> color in {0,1,2}.
struct EdgeColoring {
  std::vector<Color> colors;

  bool operator==(const EdgeColoring&) const = default;
  auto operator<=>(const EdgeColoring&) const = default;
};

// `labeled` counts colorings as maps; `partitions` counts them up to the six
// permutations of the color names. For connected graphs labeled = 6 *
// partitions.
struct ColoringCount {
  std::uint64_t labeled = 0;
  std::uint64_t partitions = 0;

  bool operator==(const ColoringCount&) const = default;
};

struct ColorPair {
  Color first = 0;
  Color second = 1;
};

// One two-colored component of a proper coloring: an even cycle. `edges`
// alternate first/second starting with a `first` edge at vertices[0];
// vertices[i] is the tail of edges[i].
struct KempeChain {
  ColorPair pair;
  std::vector<EdgeId> edges;
  std::vector<Vertex> vertices;
};

bool is_proper(const CubicGraph& g, const EdgeColoring& c);

EdgeColoring permute_colors(const EdgeColoring& c, const std::array<Color, 3>& perm);
// Renames colors so they first appear in the order 0, 1, 2 along the edge
// list. Two colorings induce the same partition iff their normal forms agree.
EdgeColoring partition_normal_form(const EdgeColoring& c);
// Tries all six color permutations.
bool same_partition(const EdgeColoring& a, const EdgeColoring& b);

// All labeled proper 3-edge colorings, sorted lexicographically.
std::vector<EdgeColoring> enumerate_edge_colorings(const CubicGraph& g);
// One representative per partition, normalized by partition_normal_form and
// sorted.
std::vector<EdgeColoring> enumerate_partitions(const CubicGraph& g);

// Throws DomainError on a disconnected graph.
ColoringCount count_colorings(const CubicGraph& g);
// Stops as soon as a second partition turns up.
bool is_uniquely_3_edge_colorable(const CubicGraph& g);

// The cycles of the two chosen color classes, ordered by smallest vertex.
std::vector<KempeChain> kempe_cycles(const CubicGraph& g, const EdgeColoring& c,
                                     ColorPair pair);
// Exchanges the two colors on `chain`, which must be a full component.
EdgeColoring kempe_switch(const CubicGraph& g, const EdgeColoring& c,
                          const KempeChain& chain);

}  // namespace ucg
