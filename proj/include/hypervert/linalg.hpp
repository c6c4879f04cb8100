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
#include <optional>
#include <span>
#include <vector>

#include "hypervert/rational.hpp"

namespace hypervert {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by Gaussian elimination over the rationals.
std::size_t rank(RationalMatrix m);

/// Solves the square system A x = rhs. Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve_square(RationalMatrix a,
                                                  std::vector<Rational> rhs);

/// Incrementally maintained row-echelon basis of a set of vectors. Copyable,
/// so depth-first subset searches can snapshot it per level.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Adds v if it is independent of the vectors already held; returns
  /// whether it was added.
  bool try_add(std::span<const Rational> v);
  bool is_independent(std::span<const Rational> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  std::vector<Rational> reduce(std::span<const Rational> v) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;  // each normalized: 1 at pivots_[k]
  std::vector<std::size_t> pivots_;
};

}  // namespace hypervert
