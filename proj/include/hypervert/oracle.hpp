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
#include <vector>

#include "hypervert/arrangement.hpp"

namespace hypervert {

/// One distinct vertex found by brute force.
struct OracleVertex {
  /// Coordinates plus the co-basis whose basis is lexicographically minimum
  /// among all co-bases through the point (user labels).
  VertexRecord record;
  /// Every independent co-basis through the point, internal labels,
  /// ascending.
  std::vector<LabelSet> cobases;
  /// The lex-min co-basis again, in internal labels.
  LabelSet lexmin_cobasis;
};

struct OracleResult {
  std::vector<OracleVertex> vertices;  // sorted by coordinates
  std::size_t cobasis_count = 0;

  std::size_t count() const { return vertices.size(); }
  /// All independent co-bases of the arrangement (internal labels), in
  /// lexicographic order.
  std::vector<LabelSet> all_cobases() const;
};

/// Brute-force vertex enumeration: every independent d-subset of labels is
/// solved exactly and points are deduplicated by exact coordinates. Subsets
/// are generated in lexicographic order with dependent prefixes pruned.
OracleResult oracle_enumerate(const Arrangement& arr);

}  // namespace hypervert
