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

#include "ucg/subdivision.hpp"

#include <algorithm>
#include <deque>

#include "ucg/error.hpp"

namespace ucg {
namespace {

constexpr int kFree = -1;
constexpr int kForbidden = -2;
constexpr int kBranch = -3;
// Interior path vertices store the pattern edge they belong to (>= 0).

const CubicGraph& p92() {
  static const CubicGraph g = generalized_petersen({9, 2});
  return g;
}

// Grows the pattern one edge at a time from pattern vertex 0. Pattern vertex
// 0 is mapped to the smallest branch image and its three paths leave through
// its three host edges in incidence order; both are symmetry reductions valid
// for vertex-transitive patterns whose vertex stabilizer acts as S3 on the
// neighbors (K3,3 and Petersen).
class SubdivisionSearch {
 public:
  SubdivisionSearch(const CubicGraph& host, Pattern pattern,
                    std::span<const Vertex> forbidden)
      : host_(host),
        pattern_(pattern),
        pat_(pattern_graph(pattern)),
        n_(host.order()),
        m_(pat_.order()),
        base_owner_(n_, kFree) {
    for (Vertex v : forbidden) {
      if (v < 0 || v >= n_) throw DomainError("forbidden vertex out of range");
      base_owner_[v] = kForbidden;
    }
    order_edges();
    distances();
  }

  std::optional<SubdivisionCertificate> run(bool minimal) {
    const int free = static_cast<int>(
        std::count(base_owner_.begin(), base_owner_.end(), kFree));
    if (free < m_) return std::nullopt;
    for (int limit = minimal ? 0 : free - m_; limit <= free - m_; ++limit) {
      for (Vertex root = 0; root < n_; ++root) {
        if (base_owner_[root] != kFree) continue;
        owner_ = base_owner_;
        image_.assign(m_, -1);
        pending_.assign(m_, 3);
        paths_.assign(pat_.size(), {});
        budget_ = limit;
        root_ = root;
        image_[0] = root;
        owner_[root] = kBranch;
        if (process(0)) return certificate();
      }
    }
    return std::nullopt;
  }

 private:
  struct Step {
    int p;
    int q;
    EdgeId pattern_edge;
  };

  void order_edges() {
    std::vector<char> seen(m_, 0), listed(pat_.size(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      const int p = queue.front();
      queue.pop_front();
      std::vector<std::pair<int, EdgeId>> around;
      for (EdgeId e : pat_.incident(p)) around.push_back({pat_.other(e, p), e});
      std::sort(around.begin(), around.end());
      for (auto [q, e] : around) {
        if (listed[e]) continue;
        listed[e] = 1;
        steps_.push_back({p, q, e});
        if (!seen[q]) {
          seen[q] = 1;
          queue.push_back(q);
        }
      }
    }
  }

  void distances() {
    dist_.assign(static_cast<std::size_t>(n_) * n_, n_ + 1);
    for (Vertex s = 0; s < n_; ++s) {
      std::deque<Vertex> queue{s};
      dist_[s * n_ + s] = 0;
      while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : host_.neighbors(x)) {
          if (dist_[s * n_ + y] > n_) {
            dist_[s * n_ + y] = dist_[s * n_ + x] + 1;
            queue.push_back(y);
          }
        }
      }
    }
  }

  int dist(Vertex a, Vertex b) const { return dist_[a * n_ + b]; }

  bool edge_pending(int p, int q) const {
    for (std::size_t i = cursor_; i < steps_.size(); ++i) {
      const Step& s = steps_[i];
      if ((s.p == p && s.q == q) || (s.p == q && s.q == p)) return true;
    }
    return false;
  }

  // Every mapped pattern vertex still needs one usable host edge per pattern
  // edge not yet started.
  bool capacity_ok() const {
    for (int p = 0; p < m_; ++p) {
      if (image_[p] < 0 || pending_[p] == 0) continue;
      int usable = 0;
      for (Vertex y : host_.neighbors(image_[p])) {
        if (owner_[y] == kFree) {
          ++usable;
        } else if (owner_[y] == kBranch) {
          const auto it = std::find(image_.begin(), image_.end(), y);
          if (edge_pending(p, static_cast<int>(it - image_.begin()))) ++usable;
        }
      }
      if (usable < pending_[p]) return false;
    }
    return true;
  }

  bool process(std::size_t idx) {
    if (idx == steps_.size()) return true;
    cursor_ = idx;
    if (!capacity_ok()) return false;
    const Step& step = steps_[idx];
    --pending_[step.p];
    paths_[step.pattern_edge].assign(1, image_[step.p]);
    const bool ok = grow(idx, image_[step.p]);
    ++pending_[step.p];
    return ok;
  }

  bool grow(std::size_t idx, Vertex x) {
    const Step& step = steps_[idx];
    const Vertex start = image_[step.p];
    const Vertex target = image_[step.q];
    std::vector<Vertex>& path = paths_[step.pattern_edge];

    std::array<Vertex, 3> next = host_.neighbors(x);
    if (target >= 0) {
      std::sort(next.begin(), next.end(), [&](Vertex a, Vertex b) {
        return std::pair(dist(a, target), a) < std::pair(dist(b, target), b);
      });
    } else {
      std::sort(next.begin(), next.end());
    }
    for (Vertex y : next) {
      if (idx < 3 && x == start && y != host_.other(host_.incident(start)[idx], start)) {
        continue;
      }
      if (target >= 0 && y == target) {
        path.push_back(y);
        --pending_[step.q];
        if (process(idx + 1)) return true;
        cursor_ = idx;
        ++pending_[step.q];
        path.pop_back();
        continue;
      }
      if (owner_[y] != kFree) continue;
      if (target < 0 && y > root_) {
        image_[step.q] = y;
        owner_[y] = kBranch;
        path.push_back(y);
        --pending_[step.q];
        if (process(idx + 1)) return true;
        cursor_ = idx;
        ++pending_[step.q];
        path.pop_back();
        owner_[y] = kFree;
        image_[step.q] = -1;
      }
      if (budget_ == 0) continue;
      if (target >= 0 && dist(y, target) - 1 > budget_ - 1) continue;
      owner_[y] = static_cast<int>(step.pattern_edge);
      --budget_;
      path.push_back(y);
      if (grow(idx, y)) return true;
      path.pop_back();
      ++budget_;
      owner_[y] = kFree;
    }
    return false;
  }

  SubdivisionCertificate certificate() const {
    SubdivisionCertificate cert{pattern_, image_, paths_};
    for (const Step& s : steps_) {
      if (pat_.edge(s.pattern_edge).u != s.p) {
        auto& path = cert.paths[s.pattern_edge];
        std::reverse(path.begin(), path.end());
      }
    }
    return cert;
  }

  const CubicGraph& host_;
  Pattern pattern_;
  const CubicGraph& pat_;
  int n_;
  int m_;
  std::vector<int> base_owner_;
  std::vector<Step> steps_;
  std::vector<int> dist_;

  std::vector<int> owner_;
  std::vector<Vertex> image_;
  std::vector<int> pending_;
  std::vector<std::vector<Vertex>> paths_;
  std::size_t cursor_ = 0;
  int budget_ = 0;
  Vertex root_ = 0;
};

}  // namespace

std::string pattern_name(Pattern p) {
  return p == Pattern::kK33 ? "K33" : "PETERSEN";
}

const CubicGraph& pattern_graph(Pattern p) {
  static const CubicGraph k33 = complete_bipartite_k33();
  static const CubicGraph petersen = petersen_graph();
  return p == Pattern::kK33 ? k33 : petersen;
}

bool verify_subdivision(const CubicGraph& host, const SubdivisionCertificate& cert,
                        std::span<const Vertex> forbidden, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  const CubicGraph& pat = pattern_graph(cert.pattern);
  const int n = host.order();
  if (static_cast<int>(cert.branch_map.size()) != pat.order()) {
    return fail("branch map has the wrong size");
  }
  if (static_cast<int>(cert.paths.size()) != pat.size()) {
    return fail("one path per pattern edge is required");
  }
  std::vector<int> use(n, 0);  // 0 free, 1 branch, 2 interior
  for (Vertex v : forbidden) {
    if (v >= 0 && v < n) use[v] = 3;
  }
  for (Vertex b : cert.branch_map) {
    if (b < 0 || b >= n) return fail("branch vertex out of range");
    if (use[b] == 3) return fail("branch vertex " + std::to_string(b) + " is forbidden");
    if (use[b] == 1) return fail("branch map is not injective");
    use[b] = 1;
  }
  for (EdgeId e = 0; e < pat.size(); ++e) {
    const auto& path = cert.paths[e];
    const Edge& pe = pat.edge(e);
    if (path.size() < 2) return fail("path " + std::to_string(e) + " is too short");
    if (path.front() != cert.branch_map[pe.u] || path.back() != cert.branch_map[pe.v]) {
      return fail("path " + std::to_string(e) + " has the wrong ends");
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (path[i + 1] < 0 || path[i + 1] >= n || !host.adjacent(path[i], path[i + 1])) {
        return fail("path " + std::to_string(e) + " uses a non-edge");
      }
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      const Vertex x = path[i];
      if (use[x] == 3) return fail("vertex " + std::to_string(x) + " is forbidden");
      if (use[x] != 0) {
        return fail("vertex " + std::to_string(x) + " is shared between paths");
      }
      use[x] = 2;
    }
  }
  return true;
}

std::optional<SubdivisionCertificate> find_subdivision(const CubicGraph& host,
                                                       Pattern pattern,
                                                       std::span<const Vertex> forbidden,
                                                       bool minimal) {
  SubdivisionSearch search(host, pattern, forbidden);
  auto cert = search.run(minimal);
  if (cert) {
    std::string why;
    if (!verify_subdivision(host, *cert, forbidden, &why)) {
      throw DomainError("subdivision search produced an invalid certificate: " + why);
    }
  }
  return cert;
}

std::optional<SubdivisionCertificate> find_k33_subdivision(
    const CubicGraph& g, std::span<const Vertex> forbidden) {
  return find_subdivision(g, Pattern::kK33, forbidden, false);
}

std::optional<SubdivisionCertificate> find_petersen_subdivision(const CubicGraph& g) {
  return find_subdivision(g, Pattern::kPetersen, {}, false);
}

std::vector<Vertex> unused_vertices(const CubicGraph& host,
                                    const SubdivisionCertificate& cert) {
  std::vector<char> used(host.order(), 0);
  for (Vertex b : cert.branch_map) used[b] = 1;
  for (const auto& path : cert.paths) {
    for (Vertex x : path) used[x] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < host.order(); ++v) {
    if (!used[v]) out.push_back(v);
  }
  return out;
}

DisjointSubdivisions find_disjoint_k33_subdivisions(const FamilyMember& member) {
  DisjointSubdivisions out;
  std::vector<char> taken(member.graph.order(), 0);
  for (int copy = 0; copy < member.k; ++copy) {
    std::vector<Vertex> to_member(18, -1);
    for (Vertex v = 0; v < member.graph.order(); ++v) {
      if (member.origin[v].first == copy) to_member[member.origin[v].second] = v;
    }
    std::vector<Vertex> lost;
    for (Vertex v = 0; v < 18; ++v) {
      if (to_member[v] < 0) lost.push_back(v);
    }
    const auto local = find_k33_subdivision(p92(), lost);
    if (!local) {
      out.failed_copy = copy;
      out.certificates.clear();
      return out;
    }
    SubdivisionCertificate mapped{local->pattern, {}, {}};
    for (Vertex b : local->branch_map) mapped.branch_map.push_back(to_member[b]);
    for (const auto& path : local->paths) {
      std::vector<Vertex> p;
      for (Vertex x : path) p.push_back(to_member[x]);
      mapped.paths.push_back(std::move(p));
    }
    std::string why;
    if (!verify_subdivision(member.graph, mapped, {}, &why)) {
      throw DomainError("mapped certificate for copy " + std::to_string(copy) +
                        " is invalid: " + why);
    }
    for (Vertex b : mapped.branch_map) {
      if (taken[b]) throw DomainError("certificates overlap");
      taken[b] = 1;
    }
    for (const auto& path : mapped.paths) {
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (taken[path[i]]) throw DomainError("certificates overlap");
        taken[path[i]] = 1;
      }
    }
    out.certificates.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace ucg
