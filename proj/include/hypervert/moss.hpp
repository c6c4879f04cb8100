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

#include <vector>

#include "hypervert/dictionary.hpp"
#include "hypervert/reverse_search.hpp"

namespace hypervert {

/// Ratio-test neighbours of a dictionary. For every co-basic column s the
/// ratios t_i = a_ig / a_is (a_is != 0) are formed; every row attaining
/// the smallest positive ratio, every row attaining the largest negative
/// ratio and every row with a zero ratio is a candidate. Ordered by column,
/// then row.
std::vector<PivotPosition> adjacent_pivots(const Dictionary& dict);

/// Stored breadth-first search from the initial dictionary over
/// adjacent_pivots, deduplicating by a set of visited co-bases and emitting
/// lex-min dictionaries. stats.stored_cobases reports the set's size.
EnumerationResult enumerate_moss(const Arrangement& arr, const SearchOptions& options = {});

}  // namespace hypervert
