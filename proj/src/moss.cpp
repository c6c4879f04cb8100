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

#include "hypervert/moss.hpp"

#include <deque>
#include <memory>
#include <optional>
#include <set>

namespace hypervert {

std::vector<PivotPosition> adjacent_pivots(const Dictionary& dict) {
  std::vector<PivotPosition> out;
  const auto& basis = dict.basis();
  const auto& cobasis = dict.cobasis();
  std::vector<std::optional<Rational>> ratio(basis.size());
  for (std::size_t c = 0; c < cobasis.size(); ++c) {
    std::optional<Rational> min_pos;
    std::optional<Rational> max_neg;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Rational& a = dict.entry(i, c + 1);
      if (a.is_zero()) {
        ratio[i].reset();
        continue;
      }
      ratio[i] = dict.constant(i) / a;
      const Rational& t = *ratio[i];
      if (t.sign() > 0 && (!min_pos || t < *min_pos)) min_pos = t;
      if (t.sign() < 0 && (!max_neg || t > *max_neg)) max_neg = t;
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!ratio[i]) continue;
      const Rational& t = *ratio[i];
      if (t.is_zero() || (min_pos && t == *min_pos) || (max_neg && t == *max_neg)) {
        out.push_back({basis[i], cobasis[c]});
      }
    }
  }
  return out;
}

EnumerationResult enumerate_moss(const Arrangement& arr, const SearchOptions& options) {
  auto init = initial_cobasis(arr);
  auto relabeled = std::make_shared<const Arrangement>(std::move(init.arrangement));

  EnumerationResult result;
  if (options.instrument) result.trace.emplace();
  result.root_cobasis = relabeled->to_user(init.cobasis);

  std::set<LabelSet> seen;
  std::deque<std::pair<Dictionary, std::size_t>> frontier;
  auto visit = [&](const Dictionary& dict, std::size_t depth) {
    result.stats.record_visit(depth);
    ++result.stats.lexmin_tests;
    if (lexmin_test(dict)) {
      result.vertices.push_back(make_record(dict));
      ++result.stats.vertices_emitted;
    }
    if (result.trace) {
      result.trace->visited.push_back(dict.cobasis());
      result.trace->depths.push_back(depth);
    }
  };

  Dictionary root = Dictionary::build(relabeled, init.cobasis);
  seen.insert(root.cobasis());
  visit(root, 0);
  frontier.emplace_back(std::move(root), 0);
  while (!frontier.empty()) {
    auto [dict, depth] = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& p : adjacent_pivots(dict)) {
      // Compare the candidate co-basis against the stored set before pivoting.
      LabelSet candidate = dict.cobasis();
      std::erase(candidate, p.col);
      candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), p.row), p.row);
      if (!seen.insert(candidate).second) continue;
      Dictionary next = pivot(dict, p.row, p.col);
      ++result.stats.pivots;
      visit(next, depth + 1);
      frontier.emplace_back(std::move(next), depth + 1);
    }
  }
  result.stats.stored_cobases = seen.size();
  return result;
}

}  // namespace hypervert
