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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ucg/graph.hpp"
#include "ucg/serialize.hpp"

namespace ucg {

enum class Verdict { kPass, kFail, kSkippedGuard };

// "pass", "fail", "skipped: guard".
std::string verdict_name(Verdict v);

struct ClaimReport {
  std::string claim;
  Json inputs;
  Verdict verdict = Verdict::kFail;
  Json evidence;
  double wall_time = 0;  // seconds
};

// wall_time is left out unless asked for, so reports are reproducible byte
// for byte.
Json report_to_json(const ClaimReport& r, bool with_timing = false);

constexpr std::uint64_t kDefaultSeed = 20260101;

struct ClaimOptions {
  std::optional<CubicGraph> graph;
  std::optional<CubicGraph> g1;
  std::optional<CubicGraph> g2;
  int k = 2;
  std::uint64_t seed = kDefaultSeed;
  int samples = 50;  // star product specs per pair when sampling
  bool all_specs = false;
  int threads = 1;
};

// Registered claim ids, sorted.
const std::vector<std::string>& claim_ids();
bool is_claim(std::string_view id);

// Runs one claim. Unknown ids and bad parameters throw ParameterError;
// resource guards become a "skipped: guard" verdict.
ClaimReport run_claim(std::string_view id, const ClaimOptions& opts);

struct AggregateReport {
  std::vector<ClaimReport> claims;  // sorted by claim id
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

// Every claim through family level k; per-level claims are suffixed "-k<j>".
AggregateReport report_all(int k, const ClaimOptions& base);
Json aggregate_to_json(const AggregateReport& r, bool with_timing = false);

// 1 if anything failed, 3 if nothing ran because every check hit a guard,
// else 0.
int exit_code(const std::vector<ClaimReport>& reports);

}  // namespace ucg
