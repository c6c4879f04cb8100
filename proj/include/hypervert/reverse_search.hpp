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

#include <cstddef>
#include <optional>
#include <vector>

#include "hypervert/arrangement.hpp"
#include "hypervert/dictionary.hpp"

namespace hypervert {

/// Operation counters of one enumeration run.
struct SearchStats {
  std::size_t dictionaries_visited = 0;
  std::size_t pivots = 0;
  std::size_t reverse_tests = 0;
  std::size_t lexmin_tests = 0;
  std::size_t max_depth = 0;
  /// layer_counts[k]: dictionaries visited at depth k (k = 0..d for the
  /// Zero rule; grows as needed for the Criss-Cross searches).
  std::vector<std::size_t> layer_counts;
  std::size_t vertices_emitted = 0;
  /// Co-bases held in memory at the end of the run (0 for reverse search).
  std::size_t stored_cobases = 0;

  void record_visit(std::size_t depth);
};

/// Debug record of a run; only produced when SearchOptions::instrument.
struct SearchTrace {
  struct Test {
    LabelSet cobasis;   // dictionary the entry was tested on (internal)
    PivotPosition entry;  // row = s (basic), col = r (co-basic)
    bool valid = false;
  };
  std::vector<LabelSet> visited;    // internal labels, visit order
  std::vector<std::size_t> depths;  // parallel to visited
  std::vector<Test> tests;
  /// Visits to a co-basis already seen in this run, detected by a shadow
  /// set the search itself never reads.
  std::size_t revisits = 0;
};

struct SearchOptions {
  bool instrument = false;
};

struct EnumerationResult {
  std::vector<VertexRecord> vertices;  // discovery order, user labels
  SearchStats stats;
  /// Root co-basis in user labels.
  LabelSet root_cobasis;
  std::optional<SearchTrace> trace;
};

/// Vertex enumeration by reverse search over the Zero rule's spanning tree.
///
/// The instance is relabeled so that the greedy independent d-subset gets
/// labels 1..d; that co-basis is the unique terminal and the tree root.
/// Children are the valid reverses of the current dictionary, scanned by
/// ascending co-basic column then ascending basic row. Backtracking applies
/// the Zero rule and resumes after the entry it undoes, so the search
/// state is the current dictionary, its depth and a scan cursor. At depth d
/// no reverses exist, so those dictionaries are only lex-min tested.
EnumerationResult enumerate_zero(const Arrangement& arr, const SearchOptions& options = {});

/// Vertex record of a dictionary, labels mapped back to the user's.
VertexRecord make_record(const Dictionary& dict);

}  // namespace hypervert
