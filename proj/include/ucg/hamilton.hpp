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

#include <cstdint>
#include <span>
#include <vector>

#include "ucg/coloring.hpp"
#include "ucg/graph.hpp"

namespace ucg {

// A Hamilton cycle as a vertex sequence in canonical rotation: the smallest
// vertex first, followed by the smaller of its two cycle neighbors.
struct HamiltonCycle {
  std::vector<Vertex> vertices;

  bool operator==(const HamiltonCycle&) const = default;
  auto operator<=>(const HamiltonCycle&) const = default;
};

// Rotates/reflects any cyclic vertex sequence into canonical rotation.
HamiltonCycle canonical_cycle(std::span<const Vertex> cyclic);

// Every vertex exactly once and cyclically consecutive vertices adjacent.
bool is_hamilton_cycle(const CubicGraph& g, std::span<const Vertex> cyclic);

// Each cycle (as an edge set) exactly once, sorted.
std::vector<HamiltonCycle> enumerate_hamilton_cycles(const CubicGraph& g);
std::uint64_t count_hamilton_cycles(const CubicGraph& g);

// Colors the cycle alternately 0/1 starting at vertices[0] and the
// complementary perfect matching 2.
EdgeColoring coloring_from_hamilton(const CubicGraph& g, const HamiltonCycle& h);

}  // namespace ucg
