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

#include "hypervert/reverse_search.hpp"

#include <memory>
#include <set>
#include <stdexcept>

#include "hypervert/zero_rule.hpp"

namespace hypervert {

void SearchStats::record_visit(std::size_t depth) {
  ++dictionaries_visited;
  if (layer_counts.size() <= depth) layer_counts.resize(depth + 1, 0);
  ++layer_counts[depth];
  max_depth = std::max(max_depth, depth);
}

VertexRecord make_record(const Dictionary& dict) {
  const auto& arr = dict.arrangement();
  return {dict.vertex(), arr.to_user(dict.cobasis()), arr.to_user(dict.basis())};
}

namespace {

class ZeroSearch {
 public:
  ZeroSearch(std::shared_ptr<const Arrangement> arr, const SearchOptions& options)
      : d_(static_cast<std::size_t>(arr->dim())), dict_(make_root(arr)) {
    if (options.instrument) result_.trace.emplace();
    result_.stats.layer_counts.assign(d_ + 1, 0);
    result_.root_cobasis = arr->to_user(dict_.cobasis());
    if (zero_select(dict_)) throw std::logic_error("initial dictionary is not terminal");
  }

  EnumerationResult run() {
    visit();
    while (true) {
      if (depth_ < d_ && descend()) continue;
      if (depth_ == 0) break;
      backtrack();
    }
    return std::move(result_);
  }

 private:
  static Dictionary make_root(const std::shared_ptr<const Arrangement>& arr) {
    LabelSet root(static_cast<std::size_t>(arr->dim()));
    for (std::size_t k = 0; k < root.size(); ++k) root[k] = static_cast<Label>(k + 1);
    return Dictionary::build(arr, root);
  }

  // Scans from the cursor for the next valid reverse; pivots into it.
  bool descend() {
    const auto& basis = dict_.basis();
    const auto& cobasis = dict_.cobasis();
    for (std::size_t c = col_; c < cobasis.size(); ++c) {
      for (std::size_t i = (c == col_ ? row_ : 0); i < basis.size(); ++i) {
        ++result_.stats.reverse_tests;
        const bool valid = valid_reverse_zero(dict_, basis[i], cobasis[c]);
        if (result_.trace) {
          result_.trace->tests.push_back({cobasis, {basis[i], cobasis[c]}, valid});
        }
        if (!valid) continue;
        dict_ = pivot(dict_, basis[i], cobasis[c]);
        ++result_.stats.pivots;
        ++depth_;
        col_ = 0;
        row_ = 0;
        visit();
        return true;
      }
    }
    return false;
  }

  void backtrack() {
    const auto up = zero_select(dict_);
    if (!up) throw std::logic_error("non-root dictionary is terminal");
    dict_ = pivot(dict_, up->row, up->col);
    ++result_.stats.pivots;
    --depth_;
    // The undone child came from entry (up->col, up->row) of this dictionary.
    col_ = dict_.col_index(up->row) - 1;
    row_ = dict_.row_index(up->col) + 1;
  }

  void visit() {
    result_.stats.record_visit(depth_);
    ++result_.stats.lexmin_tests;
    if (lexmin_test(dict_)) {
      result_.vertices.push_back(make_record(dict_));
      ++result_.stats.vertices_emitted;
    }
    if (result_.trace) {
      if (!shadow_.insert(dict_.cobasis()).second) ++result_.trace->revisits;
      result_.trace->visited.push_back(dict_.cobasis());
      result_.trace->depths.push_back(depth_);
    }
  }

  std::size_t d_;
  Dictionary dict_;
  std::size_t depth_ = 0;
  std::size_t col_ = 0;
  std::size_t row_ = 0;
  EnumerationResult result_;
  std::set<LabelSet> shadow_;  // instrumented runs only
};

}  // namespace

EnumerationResult enumerate_zero(const Arrangement& arr, const SearchOptions& options) {
  auto init = initial_cobasis(arr);
  auto relabeled = std::make_shared<const Arrangement>(std::move(init.arrangement));
  return ZeroSearch(std::move(relabeled), options).run();
}

}  // namespace hypervert
