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

#include "hypervert/zero_rule.hpp"

namespace hypervert {

std::optional<PivotPosition> zero_select(const Dictionary& dict) {
  const auto& basis = dict.basis();
  const auto& cobasis = dict.cobasis();
  for (std::size_t k = 0; k < cobasis.size(); ++k) {
    const Label s = cobasis[k];
    for (std::size_t i = 0; i < basis.size() && basis[i] < s; ++i) {
      if (!dict.entry(i, k + 1).is_zero()) return PivotPosition{basis[i], s};
    }
  }
  return std::nullopt;
}

bool valid_reverse_zero(const Dictionary& dict, Label s, Label r) {
  if (!(r < s) || r < 1 || s > dict.arrangement().size()) return false;
  if (!dict.is_basic(s) || !dict.is_cobasic(r)) return false;
  const std::size_t row_s = dict.row_index(s);
  if (dict.at(s, r).is_zero()) return false;

  const auto& basis = dict.basis();
  const auto& cobasis = dict.cobasis();
  for (std::size_t k = 0; k < cobasis.size() && cobasis[k] < s; ++k) {
    const Label j = cobasis[k];
    if (j > r && !dict.entry(row_s, k + 1).is_zero()) return false;  // ii)
    for (std::size_t i = 0; i < basis.size() && basis[i] < j; ++i) {   // iii)
      if (!dict.entry(i, k + 1).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace hypervert
