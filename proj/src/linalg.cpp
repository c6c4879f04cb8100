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

#include "hypervert/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hypervert {

std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> solve_square(RationalMatrix a,
                                                  std::vector<Rational> rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n || rhs.size() != n) {
    throw std::invalid_argument("solve_square: shape mismatch");
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      std::swap(rhs[p], rhs[c]);
    }
    const Rational inv = Rational(1) / a(c, c);
    for (std::size_t k = c; k < n; ++k) a(c, k) *= inv;
    rhs[c] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t k = c; k < n; ++k) a(i, k) -= f * a(c, k);
      rhs[i] -= f * rhs[c];
    }
  }
  return rhs;
}

std::vector<Rational> EchelonBasis::reduce(std::span<const Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
  std::vector<Rational> w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = w[pivots_[k]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!rows_[k][c].is_zero()) w[c] -= f * rows_[k][c];
    }
  }
  return w;
}

bool EchelonBasis::is_independent(std::span<const Rational> v) const {
  for (const auto& x : reduce(v)) {
    if (!x.is_zero()) return true;
  }
  return false;
}

bool EchelonBasis::try_add(std::span<const Rational> v) {
  auto w = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && w[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Rational inv = Rational(1) / w[p];
  for (auto& x : w) x *= inv;
  // Keep the basis fully reduced so reduce() stays a single pass.
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < dim_; ++c) row[c] -= f * w[c];
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace hypervert
