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

#include "ucg/serialize.hpp"

#include <string>

#include "ucg/error.hpp"

namespace ucg {
namespace {

// nlohmann throws its own exception types on shape errors; report them as
// DomainError so callers see one family of input errors.
template <typename Fn>
auto guarded(const char* what, Fn fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

Json coloring_to_json(const CubicGraph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.size()) {
    throw DomainError("coloring size does not match the graph");
  }
  Json out = Json::array();
  for (EdgeId e = 0; e < g.size(); ++e) {
    out.push_back({{"edge", {g.edge(e).u, g.edge(e).v}}, {"color", c.colors[e]}});
  }
  return out;
}

EdgeColoring coloring_from_json(const CubicGraph& g, const Json& j) {
  return guarded("coloring", [&] {
    if (!j.is_array() || static_cast<int>(j.size()) != g.size()) {
      throw DomainError("coloring must list every edge once");
    }
    EdgeColoring c;
    for (EdgeId e = 0; e < g.size(); ++e) {
      const auto& item = j[e];
      const Edge ed{item.at("edge").at(0).get<Vertex>(), item.at("edge").at(1).get<Vertex>()};
      if (!(ed == g.edge(e))) {
        throw DomainError("coloring entry " + std::to_string(e) + " names the wrong edge");
      }
      const int color = item.at("color").get<int>();
      if (color < 0 || color > 2) throw DomainError("colors must be 0, 1 or 2");
      c.colors.push_back(static_cast<Color>(color));
    }
    return c;
  });
}

Json cycle_to_json(const HamiltonCycle& h) { return h.vertices; }

HamiltonCycle cycle_from_json(const Json& j) {
  return guarded("cycle", [&] { return HamiltonCycle{j.get<std::vector<Vertex>>()}; });
}

Json scheme_to_json(const EmbeddingScheme& s) {
  return {{"rotation", s.rotation}, {"signs", s.signs}};
}

EmbeddingScheme scheme_from_json(const Json& j) {
  return guarded("scheme", [&] {
    return EmbeddingScheme{j.at("rotation").get<std::vector<std::array<EdgeId, 3>>>(),
                           j.at("signs").get<std::vector<int>>()};
  });
}

Json certificate_to_json(const SubdivisionCertificate& c) {
  return {{"pattern", pattern_name(c.pattern)},
          {"branch_map", c.branch_map},
          {"paths", c.paths}};
}

SubdivisionCertificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    const auto name = j.at("pattern").get<std::string>();
    SubdivisionCertificate c;
    if (name == pattern_name(Pattern::kK33)) {
      c.pattern = Pattern::kK33;
    } else if (name == pattern_name(Pattern::kPetersen)) {
      c.pattern = Pattern::kPetersen;
    } else {
      throw DomainError("unknown pattern '" + name + "'");
    }
    c.branch_map = j.at("branch_map").get<std::vector<Vertex>>();
    c.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
    return c;
  });
}

Json trace_to_json(const FamilyMember& m) {
  Json specs = Json::array();
  for (const auto& s : m.trace) {
    specs.push_back({{"v1", s.v1}, {"v2", s.v2}, {"perm", s.perm}});
  }
  return {{"k", m.k}, {"specs", std::move(specs)}};
}

std::vector<StarProductSpec> trace_from_json(const Json& j) {
  return guarded("trace", [&] {
    std::vector<StarProductSpec> out;
    for (const auto& s : j.at("specs")) {
      out.push_back({s.at("v1").get<Vertex>(), s.at("v2").get<Vertex>(),
                     s.at("perm").get<int>()});
    }
    if (j.contains("k") && j.at("k").get<int>() != static_cast<int>(out.size()) + 1) {
      throw DomainError("trace length does not match k");
    }
    return out;
  });
}

std::vector<CubicGraph> read_graph6_stream(std::istream& in) {
  std::vector<CubicGraph> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": ", e);
    }
  }
  return out;
}

}  // namespace ucg
