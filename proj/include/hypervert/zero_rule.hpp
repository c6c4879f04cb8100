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

#include "hypervert/dictionary.hpp"

namespace hypervert {

/// The Zero rule. Picks the smallest co-basic column s that has a nonzero
/// entry in some basic row i < s, then the smallest such row. Returns
/// nullopt on the terminal dictionary, which is the one whose co-basis is
/// lexicographically minimum in the arrangement.
std::optional<PivotPosition> zero_select(const Dictionary& dict);

/// Whether pivoting (s, r), s basic and r co-basic, leads to a dictionary
/// on which zero_select returns (r, s). Decided from the entries of `dict`
/// alone:
///   i)   r < s and a_sr != 0
///   ii)  a_sj = 0 for co-basic j with r < j < s
///   iii) a_ij = 0 for co-basic j < s and basic i < j
bool valid_reverse_zero(const Dictionary& dict, Label s, Label r);

}  // namespace hypervert
