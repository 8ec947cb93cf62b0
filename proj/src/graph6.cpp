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

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "ucg/error.hpp"
#include "ucg/graph.hpp"

namespace ucg {
namespace {

constexpr int kBias = 63;
constexpr int kMaxOrder = 1 << 16;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string to_graph6(const CubicGraph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  std::vector<char> bits(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
  for (const Edge& e : g.edges()) {
    bits[static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u] = 1;
  }
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int word = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      word <<= 1;
      if (i + j < bits.size() && bits[i + j]) word |= 1;
    }
    out.push_back(static_cast<char>(word + kBias));
  }
  return out;
}

CubicGraph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6 line ends early", i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", i);
    return c - kBias;
  };

  int n = byte_at(pos);
  if (n == 63) {
    if (pos + 1 < text.size() && text[pos + 1] == 126) {
      throw ParseError("graph6 orders above 258047 are not supported", pos + 1);
    }
    n = (byte_at(pos + 1) << 12) | (byte_at(pos + 2) << 6) | byte_at(pos + 3);
    pos += 4;
    if (n > kMaxOrder) throw ParseError("graph order exceeds 65536", pos - 4);
  } else {
    pos += 1;
  }

  const std::size_t pairs = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (text.size() - pos < body) {
    throw ParseError("graph6 line ends early", text.size());
  }
  if (text.size() - pos > body) {
    throw ParseError("trailing bytes after graph6 body", pos + body);
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int word = byte_at(pos + bit / 6);
      if (word & (1 << (5 - bit % 6))) edges.push_back({u, v});
    }
  }
  std::sort(edges.begin(), edges.end());
  return CubicGraph(n, std::move(edges));
}

}  // namespace ucg
