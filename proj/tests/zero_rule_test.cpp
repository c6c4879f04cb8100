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

#include <gtest/gtest.h>

#include "hypervert/zero_rule.hpp"
#include "support.hpp"

namespace hypervert {
namespace {

Dictionary initial_dict() { return Dictionary::build(hvtest::five_lines(), LabelSet{1, 2}); }

TEST(ZeroSelect, FiveLinesTrace) {
  const Dictionary layer0 = initial_dict();
  const Dictionary layer1 = pivot(layer0, 4, 1);
  const Dictionary layer2 = pivot(layer1, 3, 2);
  EXPECT_FALSE(zero_select(layer0));
  EXPECT_EQ(zero_select(layer1), (PivotPosition{1, 4}));
  EXPECT_EQ(zero_select(layer2), (PivotPosition{2, 3}));
}

TEST(ValidReverse, FiveLinesVerdicts) {
  const Dictionary layer0 = initial_dict();
  EXPECT_FALSE(valid_reverse_zero(layer0, 3, 1));
  EXPECT_TRUE(valid_reverse_zero(layer0, 4, 1));
  const Dictionary layer1 = pivot(layer0, 4, 1);
  EXPECT_FALSE(valid_reverse_zero(layer1, 1, 2));
  EXPECT_TRUE(valid_reverse_zero(layer1, 3, 2));
  for (auto [s, r] : {std::pair{5, 2}, {1, 4}, {3, 4}, {5, 4}}) {
    EXPECT_FALSE(valid_reverse_zero(layer1, s, r)) << s << "," << r;
  }
}

TEST(ValidReverse, OutOfRangeEntriesAreInvalid) {
  const Dictionary layer0 = initial_dict();
  EXPECT_FALSE(valid_reverse_zero(layer0, 1, 2));
  EXPECT_FALSE(valid_reverse_zero(layer0, 9, 1));
  EXPECT_FALSE(valid_reverse_zero(layer0, 3, 0));
}

TEST(ValidReverse, OneDimensional) {
  const auto arr = std::make_shared<const Arrangement>(parse_arrangement("1 2\n0 1\n3 2\n"));
  const Dictionary root = Dictionary::build(arr, LabelSet{1});
  EXPECT_FALSE(zero_select(root));
  EXPECT_TRUE(valid_reverse_zero(root, 2, 1));
  EXPECT_EQ(zero_select(pivot(root, 2, 1)), (PivotPosition{1, 2}));
}

std::vector<std::shared_ptr<const Arrangement>> population() {
  std::vector<std::shared_ptr<const Arrangement>> out;
  out.push_back(hvtest::relabeled(*hvtest::five_lines()));
  for (const auto& arr : hvtest::small_population(20)) out.push_back(hvtest::relabeled(*arr));
  return out;
}

TEST(ZeroRule, SelectMatchesDefinition) {
  for (const auto& arr : population()) {
    for (const auto& cb : hvtest::all_cobases(*arr)) {
      const Dictionary d = Dictionary::build(arr, cb);
      EXPECT_EQ(zero_select(d), hvtest::ref_zero_select(hvtest::ref_dictionary(*arr, cb), cb));
    }
  }
}

TEST(ZeroRule, ConvergesToRootInAtMostDSteps) {
  for (const auto& arr : population()) {
    LabelSet root(static_cast<std::size_t>(arr->dim()));
    std::iota(root.begin(), root.end(), 1);
    for (const auto& cb : hvtest::all_cobases(*arr)) {
      Dictionary d = Dictionary::build(arr, cb);
      int steps = 0;
      Label last_col = 0;
      while (const auto sel = zero_select(d)) {
        EXPECT_GT(sel->col, last_col);
        last_col = sel->col;
        d = pivot(d, sel->row, sel->col);
        ASSERT_LE(++steps, arr->dim());
      }
      EXPECT_EQ(d.cobasis(), root);
    }
  }
}

TEST(ZeroRule, ReverseConditionIsExact) {
  std::size_t valid = 0;
  for (const auto& arr : population()) {
    for (const auto& cb : hvtest::all_cobases(*arr)) {
      const Dictionary d = Dictionary::build(arr, cb);
      for (Label s : d.basis()) {
        for (Label r : d.cobasis()) {
          const bool claimed = valid_reverse_zero(d, s, r);
          bool actual = false;
          if (!d.at(s, r).is_zero()) {
            actual = zero_select(pivot(d, s, r)) == PivotPosition{r, s};
          }
          EXPECT_EQ(claimed, actual) << "entry (" << s << "," << r << ")";
          valid += claimed ? 1 : 0;
        }
      }
    }
  }
  EXPECT_GT(valid, 0u);
}

}  // namespace
}  // namespace hypervert
