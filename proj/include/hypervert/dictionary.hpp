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
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypervert/arrangement.hpp"
#include "hypervert/linalg.hpp"
#include "hypervert/rational.hpp"

namespace hypervert {

/// Label of the constant column x_g. Compares below every hyperplane label.
inline constexpr Label kConstant = 0;

class SingularPivotError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PivotIndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Pivot entry (row, col): row is a basic label, col a co-basic label.
struct PivotPosition {
  Label row = 0;
  Label col = 0;

  friend bool operator==(const PivotPosition&, const PivotPosition&) = default;
};

/// x_B = A x_N for the slack variables x_i = b_i - <c_i, y> of an
/// arrangement. Rows are basic labels ascending, column 0 is x_g and
/// columns 1..d are co-basic labels ascending.
///
/// Immutable; pivot() returns a new dictionary. Holds a shared handle to
/// its arrangement so vertices and consistency checks need no extra
/// arguments.
class Dictionary {
 public:
  /// Builds the unique dictionary for a co-basis by expressing every basic
  /// normal in terms of the co-basic normals.
  static Dictionary build(std::shared_ptr<const Arrangement> arr,
                          std::span<const Label> cobasis);

  const LabelSet& basis() const { return basis_; }
  const LabelSet& cobasis() const { return cobasis_; }
  std::size_t num_rows() const { return basis_.size(); }
  std::size_t num_cols() const { return cobasis_.size(); }

  bool is_basic(Label l) const { return slot_[static_cast<std::size_t>(l)] >= 0; }
  bool is_cobasic(Label l) const { return slot_[static_cast<std::size_t>(l)] < 0; }
  std::size_t row_index(Label l) const {
    return static_cast<std::size_t>(slot_[static_cast<std::size_t>(l)]);
  }
  /// Matrix column of a co-basic label (1..d); kConstant maps to 0.
  std::size_t col_index(Label l) const {
    return l == kConstant ? 0 : static_cast<std::size_t>(~slot_[static_cast<std::size_t>(l)]) + 1;
  }

  /// Entry a_ij addressed by labels; j may be kConstant.
  const Rational& at(Label i, Label j) const { return coeffs_(row_index(i), col_index(j)); }
  /// Entry addressed by matrix position (col 0 is x_g).
  const Rational& entry(std::size_t row, std::size_t col) const { return coeffs_(row, col); }
  const Rational& constant(std::size_t row) const { return coeffs_(row, 0); }
  const RationalMatrix& coefficients() const { return coeffs_; }

  const Arrangement& arrangement() const { return *arr_; }
  const std::shared_ptr<const Arrangement>& arrangement_ptr() const { return arr_; }

  /// The point where every co-basic hyperplane meets.
  Point vertex() const { return vertex_from_cobasis(*arr_, cobasis_); }

  /// Equal index sets and coefficients.
  friend bool operator==(const Dictionary& a, const Dictionary& b) {
    return a.basis_ == b.basis_ && a.cobasis_ == b.cobasis_ && a.coeffs_ == b.coeffs_;
  }

 private:
  friend Dictionary pivot(const Dictionary& dict, Label r, Label s);

  Dictionary(std::shared_ptr<const Arrangement> arr, LabelSet basis, LabelSet cobasis,
             RationalMatrix coeffs);

  std::shared_ptr<const Arrangement> arr_;
  LabelSet basis_;
  LabelSet cobasis_;
  RationalMatrix coeffs_;
  std::vector<int> slot_;  // by label: row index, or ~column for co-basic labels
};

/// Exchanges basic x_r with co-basic x_s and re-sorts rows and columns.
Dictionary pivot(const Dictionary& dict, Label r, Label s);

/// Whether the basis is the lexicographically smallest among all
/// dictionaries at the same vertex: fails iff some row i has a_ig = 0 and
/// a_is != 0 for a co-basic s < i.
bool lexmin_test(const Dictionary& dict);

/// Checks c_i = sum_j a_ij c_j and a_ig = b_i - sum_j a_ij b_j for every
/// basic row, exactly.
bool is_consistent(const Dictionary& dict);

/// Turns the consistency check on after every pivot (process-wide).
/// A failed check throws std::logic_error.
void set_pivot_audit(bool enabled);
bool pivot_audit_enabled();
/// Number of pivots checked since the process started.
std::size_t audited_pivot_count();

/// Row x_f of an extended dictionary, keyed like a dictionary row:
/// [x_g, co-basic labels ascending].
struct ObjectiveRow {
  std::vector<Rational> coeffs;

  friend bool operator==(const ObjectiveRow&, const ObjectiveRow&) = default;
};

/// Transforms an objective row through pivot (r, s) of `before`, giving the
/// row keyed by the pivoted dictionary's co-basis.
ObjectiveRow pivot_objective(const Dictionary& before, const ObjectiveRow& row, Label r,
                             Label s);

/// "x3 = -5/2 x_g + 1/2 x1 + 1/2 x2", one line per basic variable; a
/// coefficient of magnitude 1 is written as the bare variable.
std::string dump(const Dictionary& dict);
/// "x_f = 0 x_g - x1 - x2", no trailing newline.
std::string dump(const Dictionary& dict, const ObjectiveRow& row);

}  // namespace hypervert
