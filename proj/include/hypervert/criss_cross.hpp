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

#include "hypervert/dictionary.hpp"
#include "hypervert/reverse_search.hpp"

namespace hypervert {

/// Dictionary extended with an objective row x_f. In index comparisons f
/// sits above every hyperplane label and g below.
struct ObjectiveDictionary {
  Dictionary base;
  ObjectiveRow objective;
};

/// Attaches x_f = 0 x_g - sum of the co-basic variables.
ObjectiveDictionary attach_objective(const Dictionary& dict);
/// Attaches custom coefficients keyed [x_g, co-basic labels ascending].
ObjectiveDictionary attach_objective(const Dictionary& dict, std::vector<Rational> coeffs);

/// Pivots the dictionary and its objective row together.
ObjectiveDictionary pivot(const ObjectiveDictionary& dict, Label r, Label s);

/// Re-expresses an objective given over `reference_cobasis` in the
/// co-basis of `target`, by substituting the target's rows.
ObjectiveRow carry_objective(const Dictionary& target, const LabelSet& reference_cobasis,
                             const ObjectiveRow& reference);

/// Outcome of one application of the Criss-Cross rule.
struct CrissCrossSelection {
  enum class Kind {
    kPivot,      // position holds (r, s)
    kTerminal,   // every variable primal and dual feasible
    kNoPartner,  // infeasible variable without a qualifying partner entry
  };
  Kind kind = Kind::kTerminal;
  PivotPosition position;
  Label infeasible = 0;  // the selected variable for kPivot and kNoPartner

  bool is_pivot() const { return kind == Kind::kPivot; }
};

/// Smallest-index Criss-Cross rule. Basic x_i is primal infeasible when
/// a_ig < 0, co-basic x_j dual infeasible when a_fj > 0. For a basic pick
/// r = i and s = smallest co-basic label with a_rs > 0; for a co-basic pick
/// s = i and r = smallest basic label with a_rs < 0.
CrissCrossSelection cc_select(const ObjectiveDictionary& dict);

/// The necessary-only reverse condition: (a) a_sg > 0, a_sr > 0 and
/// a_sj >= 0 for co-basic j < s; or (b) a_fr < 0, a_sr < 0 and a_ir <= 0
/// for basic i < r.
bool cc_reverse_af(const ObjectiveDictionary& dict, Label s, Label r);

/// Exact reverse condition: true iff cc_select on pivot(dict, s, r) picks
/// (r, s). Evaluated from the entries of `dict` without pivoting.
bool cc_reverse_iff(const ObjectiveDictionary& dict, Label s, Label r);

enum class ReverseMode {
  kOriginal,     // necessary-only condition, may loop or skip
  kComplemented  // exact condition
};

struct CycleReport {
  bool detected = false;
  /// Co-bases along the repeating stretch of the walk, user labels; first
  /// and last entries coincide when detected.
  std::vector<LabelSet> cycle_cobases;
  std::size_t steps_before_detection = 0;
};

struct CrissCrossOptions {
  /// Pivot budget; 0 selects 10 * n * C(n, d).
  std::size_t step_budget = 0;
  bool instrument = false;
};

struct CrissCrossResult {
  EnumerationResult enumeration;
  CycleReport cycle;
  bool budget_exceeded = false;
  /// Dictionaries where the rule cannot pivot; each roots one search
  /// (user labels).
  std::vector<LabelSet> roots;

  bool stopped_early() const { return cycle.detected || budget_exceeded; }
};

/// Default budget 10 * n * C(n, d), saturating.
std::size_t default_step_budget(int n, int d);

/// Reverse search driven by the Criss-Cross rule. The instance is
/// relabeled as for the Zero rule and the objective is minus the sum of
/// the initial co-basic slacks. Every co-basis on which the rule cannot
/// pivot roots a search; the scan order matches enumerate_zero. In
/// original mode the walk state (co-basis and scan cursor) is shadowed so
/// a repeating state stops the run with a CycleReport.
CrissCrossResult enumerate_cc(const Arrangement& arr, ReverseMode mode,
                              const CrissCrossOptions& options = {});

}  // namespace hypervert
