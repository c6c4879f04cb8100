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
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypervert/rational.hpp"

namespace hypervert {

/// Hyperplane label. Internal labels run 1..n; user labels are what the
/// instance file numbered them (line order, also 1..n).
using Label = int;

/// Sorted label set; a co-basis has d entries, a basis n-d.
using LabelSet = std::vector<Label>;

/// Hyperplane <normal, y> = offset.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The normals do not span R^d, so the arrangement has no vertex.
class NoVertexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A co-basis whose normals are linearly dependent.
class DependentCobasisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite collection of hyperplanes in R^d whose normals span R^d.
/// Immutable once constructed.
class Arrangement {
 public:
  /// Validates and takes the identity label map.
  Arrangement(int dim, std::vector<Hyperplane> hyperplanes);
  /// label_map[k] is the user label of internal label k+1.
  Arrangement(int dim, std::vector<Hyperplane> hyperplanes, std::vector<Label> label_map);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(hyperplanes_.size()); }

  /// Internal labels are 1-based.
  const Hyperplane& hyperplane(Label label) const {
    return hyperplanes_[static_cast<std::size_t>(label - 1)];
  }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const std::vector<Label>& label_map() const { return label_map_; }

  Label user_label(Label internal) const {
    return label_map_[static_cast<std::size_t>(internal - 1)];
  }
  /// Maps internal labels to user labels and sorts the result.
  LabelSet to_user(std::span<const Label> internal) const;

  /// The same hyperplanes in user-label order, with identity label map.
  Arrangement in_user_order() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  int dim_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<Label> label_map_;
};

/// Exact point y.
using Point = std::vector<Rational>;

/// A vertex together with the co-basis/basis that produced it, in user
/// labels.
struct VertexRecord {
  Point coords;
  LabelSet cobasis;
  LabelSet basis;

  friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

/// Parses the instance text format:
///   # comment
///   d n
///   b c1 ... cd      (n lines; integers or p/q)
Arrangement parse_arrangement(std::string_view text);

/// Writes the instance format. parse_arrangement(format_arrangement(a))
/// reproduces a (hyperplanes in internal order, identity label map).
std::string format_arrangement(const Arrangement& arr);

/// Unique y with <c_j, y> = b_j for every j in cobasis (internal labels).
Point vertex_from_cobasis(const Arrangement& arr, std::span<const Label> cobasis);

/// Whether the normals of the given labels are linearly independent.
bool is_independent(const Arrangement& arr, std::span<const Label> labels);

/// Complement of a sorted label set within 1..n.
LabelSet complement(std::span<const Label> labels, int n);

struct Initialization {
  Arrangement arrangement;  // relabeled
  LabelSet cobasis;         // always {1..d}
  LabelSet selected;        // the chosen hyperplanes, in the input's labels
};

/// Picks the greedy ascending-label independent d-subset and relabels it to
/// 1..d (the rest to d+1..n, order preserved).
Initialization initial_cobasis(const Arrangement& arr);

}  // namespace hypervert
