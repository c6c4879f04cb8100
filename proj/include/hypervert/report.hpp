// Copyright 2026 The Hypervert Authors
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
#include <string>
#include <string_view>
#include <vector>

#include "hypervert/arrangement.hpp"
#include "hypervert/criss_cross.hpp"
#include "hypervert/reverse_search.hpp"

namespace hypervert {

enum class Algorithm { kZero, kCrissCross, kCrissCrossAf, kMoss, kOracle };

/// "zero", "crisscross", "crisscross-af", "moss", "oracle".
Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algo);

struct RunOutcome {
  Algorithm algorithm = Algorithm::kZero;
  EnumerationResult result;
  std::optional<CycleReport> cycle;  // Criss-Cross runs only
  bool stopped_early = false;
  double seconds = 0.0;
};

/// Runs one enumerator. step_budget 0 means the default.
RunOutcome run_algorithm(const Arrangement& arr, Algorithm algo, std::size_t step_budget = 0);

/// Oracle output shaped like an enumeration result; stored_cobases holds
/// the number of independent co-bases.
EnumerationResult oracle_as_result(const Arrangement& arr);

/// Exact equality of the coordinate sets.
bool same_vertex_set(const EnumerationResult& a, const EnumerationResult& b);

/// "cobasis={1,2} basis={3,4,5} y=(11/14, 15/14)"
std::string format_vertex(const VertexRecord& v);
std::string format_label_set(const LabelSet& labels);
std::string format_vertices(const EnumerationResult& result);
std::string format_stats(const SearchStats& stats);
std::string format_cycle(const CycleReport& cycle);
/// Structured (JSON) rendering of a run, with or without the stats block.
std::string format_json(const RunOutcome& run, bool with_stats);

struct RunReport {
  struct Row {
    Algorithm algorithm;
    std::size_t vertices = 0;
    SearchStats stats;
    double seconds = 0.0;
    bool agrees = false;
    bool stopped_early = false;
  };
  std::string instance;
  std::size_t oracle_vertices = 0;
  std::vector<Row> rows;
};

RunReport compare_algorithms(const Arrangement& arr, std::string instance,
                             const std::vector<Algorithm>& algos, std::size_t step_budget = 0);
std::string render_report(const RunReport& report);

}  // namespace hypervert
