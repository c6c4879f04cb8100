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

#include "hypervert/criss_cross.hpp"
#include "hypervert/generators.hpp"
#include "hypervert/oracle.hpp"
#include "support.hpp"

namespace hypervert {
namespace {

using hvtest::q;
using Kind = CrissCrossSelection::Kind;

ObjectiveDictionary extended(const LabelSet& cobasis) {
  const auto arr = hvtest::five_lines();
  const LabelSet reference{1, 2};
  const ObjectiveRow f = attach_objective(Dictionary::build(arr, reference)).objective;
  const Dictionary d = Dictionary::build(arr, cobasis);
  return {d, carry_objective(d, reference, f)};
}

TEST(Objective, DefaultRow) {
  EXPECT_EQ(extended({1, 2}).objective.coeffs, q({"0", "-1", "-1"}));
  const auto line = std::make_shared<const Arrangement>(parse_arrangement("1 1\n2 1\n"));
  EXPECT_EQ(attach_objective(Dictionary::build(line, LabelSet{1})).objective.coeffs,
            q({"0", "-1"}));
  const Dictionary d = extended({1, 2}).base;
  EXPECT_EQ(attach_objective(d, q({"1", "2", "3"})).objective.coeffs, q({"1", "2", "3"}));
  EXPECT_THROW(attach_objective(d, q({"1"})), std::invalid_argument);
}

TEST(Objective, PivotAgreesWithSubstitution) {
  const ObjectiveDictionary p = pivot(extended({1, 2}), 4, 1);
  EXPECT_EQ(p.base.cobasis(), (LabelSet{2, 4}));
  EXPECT_EQ(p.objective.coeffs, q({"-5", "-1", "1"}));
  const ObjectiveDictionary p2 = pivot(p, 5, 2);
  EXPECT_EQ(p2.objective.coeffs, q({"-10", "2", "2"}));

  auto population = hvtest::small_population(10);
  population.push_back(hvtest::five_lines());
  for (const auto& arr : population) {
    const auto cobases = hvtest::all_cobases(*arr);
    const LabelSet& reference = cobases.front();
    const ObjectiveRow f = attach_objective(Dictionary::build(arr, reference)).objective;
    for (const auto& cb : cobases) {
      const Dictionary d = Dictionary::build(arr, cb);
      const ObjectiveDictionary od{d, carry_objective(d, reference, f)};
      for (Label r : d.basis()) {
        for (Label s : d.cobasis()) {
          if (d.at(r, s).is_zero()) continue;
          const ObjectiveDictionary p = pivot(od, r, s);
          EXPECT_EQ(p.objective, carry_objective(p.base, reference, f));
        }
      }
    }
  }
}

TEST(CrissCross, SelectOnFiveLines) {
  const auto s11 = cc_select(extended({1, 2}));
  EXPECT_EQ(s11.kind, Kind::kPivot);
  EXPECT_EQ(s11.position, (PivotPosition{3, 1}));
  const auto s45 = cc_select(extended({4, 5}));
  EXPECT_EQ(s45.kind, Kind::kPivot);
  EXPECT_EQ(s45.position, (PivotPosition{1, 4}));
  EXPECT_EQ(s45.infeasible, 4);
  EXPECT_EQ(cc_select(extended({3, 4})).kind, Kind::kTerminal);
}

TEST(CrissCross, NoPartnerIsDistinctFromTerminal) {
  const auto arr = std::make_shared<const Arrangement>(parse_arrangement("1 2\n0 1\n-1 -1\n"));
  const auto sel = cc_select(attach_objective(Dictionary::build(arr, LabelSet{1})));
  EXPECT_EQ(sel.kind, Kind::kNoPartner);
  EXPECT_EQ(sel.infeasible, 2);
  EXPECT_FALSE(sel.is_pivot());
}

TEST(CrissCross, NecessaryConditionOnFiveLines) {
  const ObjectiveDictionary d11 = extended({1, 2});
  EXPECT_TRUE(cc_reverse_af(d11, 4, 1));
  EXPECT_TRUE(cc_reverse_iff(d11, 4, 1));
  const ObjectiveDictionary d12 = pivot(d11, 4, 1);
  EXPECT_TRUE(cc_reverse_af(d12, 5, 2));
  const ObjectiveDictionary d13 = pivot(d12, 5, 2);
  EXPECT_EQ(d13.base.cobasis(), (LabelSet{4, 5}));
  for (Label s : d13.base.basis()) {
    for (Label r : d13.base.cobasis()) EXPECT_FALSE(cc_reverse_af(d13, s, r));
  }
  EXPECT_FALSE(cc_reverse_af(d11, 1, 2));
  EXPECT_FALSE(cc_reverse_iff(d11, 5, 2));
}

std::vector<std::shared_ptr<const Arrangement>> population() {
  std::vector<std::shared_ptr<const Arrangement>> out{hvtest::relabeled(*hvtest::five_lines())};
  for (const auto& arr : hvtest::small_population(20)) out.push_back(hvtest::relabeled(*arr));
  return out;
}

TEST(CrissCross, ExactConditionMatchesPivotThenSelect) {
  std::size_t strict = 0;
  std::size_t valid = 0;
  bool strict_on_five_lines = false;
  bool first = true;
  for (const auto& arr : population()) {
    LabelSet reference(static_cast<std::size_t>(arr->dim()));
    std::iota(reference.begin(), reference.end(), 1);
    const ObjectiveRow f = attach_objective(Dictionary::build(arr, reference)).objective;
    for (const auto& cb : hvtest::all_cobases(*arr)) {
      const Dictionary d = Dictionary::build(arr, cb);
      const ObjectiveDictionary od{d, carry_objective(d, reference, f)};
      for (Label s : d.basis()) {
        for (Label r : d.cobasis()) {
          const bool iff = cc_reverse_iff(od, s, r);
          const bool af = cc_reverse_af(od, s, r);
          bool actual = false;
          if (!d.at(s, r).is_zero()) {
            const auto sel = cc_select(pivot(od, s, r));
            actual = sel.is_pivot() && sel.position == PivotPosition{r, s};
          } else {
            EXPECT_FALSE(iff);
          }
          EXPECT_EQ(iff, actual) << "entry (" << s << "," << r << ")";
          if (iff) {
            EXPECT_TRUE(af) << "entry (" << s << "," << r << ")";
            ++valid;
          }
          if (af && !iff) {
            ++strict;
            strict_on_five_lines = strict_on_five_lines || first;
          }
        }
      }
    }
    first = false;
  }
  EXPECT_GT(valid, 0u);
  EXPECT_GT(strict, 0u);
  EXPECT_TRUE(strict_on_five_lines);
}

TEST(CrissCross, OriginalModeCyclesOnFiveLines) {
  const CrissCrossResult r = enumerate_cc(*hvtest::five_lines(), ReverseMode::kOriginal);
  ASSERT_TRUE(r.cycle.detected);
  EXPECT_TRUE(r.stopped_early());
  const auto& cyc = r.cycle.cycle_cobases;
  ASSERT_GE(cyc.size(), 2u);
  EXPECT_EQ(cyc.front(), cyc.back());
  const std::set<LabelSet> seen(cyc.begin(), cyc.end());
  for (const LabelSet& cb : {LabelSet{4, 5}, LabelSet{3, 5}, LabelSet{1, 3}, LabelSet{1, 2},
                             LabelSet{1, 5}}) {
    EXPECT_TRUE(seen.count(cb)) << "missing co-basis " << cb[0] << "," << cb[1];
  }
  EXPECT_GT(r.cycle.steps_before_detection, 0u);
}

TEST(CrissCross, ComplementedModeMatchesOracle) {
  auto check = [](const Arrangement& arr) {
    const CrissCrossResult r = enumerate_cc(arr, ReverseMode::kComplemented);
    EXPECT_FALSE(r.stopped_early());
    EXPECT_EQ(hvtest::points_of(r.enumeration.vertices), hvtest::ref_vertices(arr));
    EXPECT_EQ(r.enumeration.vertices.size(), hvtest::ref_vertices(arr).size());
    EXPECT_EQ(r.enumeration.stats.dictionaries_visited, hvtest::all_cobases(arr).size());
  };
  check(*hvtest::five_lines());
  for (const auto& arr : hvtest::small_population(20)) check(*arr);
  EXPECT_EQ(enumerate_cc(gen_hypercube(4), ReverseMode::kComplemented).enumeration.vertices.size(),
            16u);
}

TEST(CrissCross, OriginalModeMissesHypercubeVertices) {
  const CrissCrossResult r = enumerate_cc(gen_hypercube(4), ReverseMode::kOriginal);
  EXPECT_LT(r.enumeration.vertices.size(), 16u);
}

TEST(CrissCross, StepBudget) {
  EXPECT_EQ(default_step_budget(5, 2), 500u);
  EXPECT_EQ(default_step_budget(8, 4), 10u * 8u * 70u);
  CrissCrossOptions options;
  options.step_budget = 3;
  const CrissCrossResult r = enumerate_cc(gen_hypercube(4), ReverseMode::kComplemented, options);
  EXPECT_TRUE(r.budget_exceeded);
  EXPECT_TRUE(r.stopped_early());
  EXPECT_LE(r.enumeration.stats.pivots, 3u);
}

}  // namespace
}  // namespace hypervert
