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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ucg/graph.hpp"
#include "ucg/product.hpp"

namespace ucg {

enum class Pattern { kK33, kPetersen };

std::string pattern_name(Pattern p);
// K3,3 has sides {0,1,2} and {3,4,5}; Petersen is generalized_petersen(5,2).
const CubicGraph& pattern_graph(Pattern p);

// A subdivision of `pattern` in a host graph. branch_map[p] is the host image
// of pattern vertex p; paths[i] runs from branch_map[a] to branch_map[b] for
// pattern edge i = (a, b), endpoints included.
struct SubdivisionCertificate {
  Pattern pattern = Pattern::kK33;
  std::vector<Vertex> branch_map;
  std::vector<std::vector<Vertex>> paths;

  bool operator==(const SubdivisionCertificate&) const = default;
};

// Checks the certificate from scratch: injective branch map, every path a
// host path with the right ends, no vertex shared between path interiors or
// with branch vertices, and no forbidden vertex used. On failure `why`
// receives the reason.
bool verify_subdivision(const CubicGraph& host, const SubdivisionCertificate& cert,
                        std::span<const Vertex> forbidden = {},
                        std::string* why = nullptr);

// Backtracking over branch images and path extensions; paths toward an
// already placed branch vertex try the neighbor closest to it first. With
// `minimal` the number of subdividing vertices is deepened one at a time, so
// the certificate uses as few host vertices as possible (much slower on large
// hosts). Certificates are verified before return.
std::optional<SubdivisionCertificate> find_subdivision(const CubicGraph& host,
                                                       Pattern pattern,
                                                       std::span<const Vertex> forbidden,
                                                       bool minimal = false);

std::optional<SubdivisionCertificate> find_k33_subdivision(
    const CubicGraph& g, std::span<const Vertex> forbidden);
std::optional<SubdivisionCertificate> find_petersen_subdivision(const CubicGraph& g);

// Vertices untouched by the certificate.
std::vector<Vertex> unused_vertices(const CubicGraph& host,
                                    const SubdivisionCertificate& cert);

// One K3,3 certificate per P(9,2) copy of a family member, each avoiding
// the vertices that copy lost to compositions, mapped into the member's
// labels. On failure `failed_copy` names the first copy without one.
struct DisjointSubdivisions {
  std::vector<SubdivisionCertificate> certificates;
  int failed_copy = -1;

  bool ok() const { return failed_copy < 0; }
};

DisjointSubdivisions find_disjoint_k33_subdivisions(const FamilyMember& member);

}  // namespace ucg
