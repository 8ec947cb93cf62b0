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

#include <istream>
#include <vector>

#include <json.hpp>

#include "ucg/coloring.hpp"
#include "ucg/embedding.hpp"
#include "ucg/hamilton.hpp"
#include "ucg/product.hpp"
#include "ucg/subdivision.hpp"

namespace ucg {

using Json = nlohmann::ordered_json;

// [{"edge": [u, v], "color": c}, ...] in edge id order.
Json coloring_to_json(const CubicGraph& g, const EdgeColoring& c);
EdgeColoring coloring_from_json(const CubicGraph& g, const Json& j);

Json cycle_to_json(const HamiltonCycle& h);
HamiltonCycle cycle_from_json(const Json& j);

// {"rotation": [[e, e, e], ...], "signs": [1, -1, ...]}
Json scheme_to_json(const EmbeddingScheme& s);
EmbeddingScheme scheme_from_json(const Json& j);

// {"pattern": "K33", "branch_map": [...], "paths": [[...], ...]}
Json certificate_to_json(const SubdivisionCertificate& c);
SubdivisionCertificate certificate_from_json(const Json& j);

// {"k": k, "specs": [{"v1": a, "v2": b, "perm": p}, ...]}; replay_trace on
// the specs rebuilds the member exactly.
Json trace_to_json(const FamilyMember& m);
std::vector<StarProductSpec> trace_from_json(const Json& j);

// One graph per non-empty line. Throws ParseError with the line number.
std::vector<CubicGraph> read_graph6_stream(std::istream& in);

}  // namespace ucg
