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

// Reference computations used as oracles by the test suites. Everything
// here is written from the definitions with cofactor determinants and
// Cramer's rule, sharing no elimination code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypervert/arrangement.hpp"
#include "hypervert/criss_cross.hpp"
#include "hypervert/dictionary.hpp"
#include "hypervert/generators.hpp"
#include "hypervert/oracle.hpp"

namespace hvtest {

using hypervert::Arrangement;
using hypervert::Dictionary;
using hypervert::Label;
using hypervert::LabelSet;
using hypervert::Point;
using hypervert::Rational;

inline const char* kFiveLinesText =
    "# five lines in the plane\n"
    "2 5\n"
    "4 1 3\n"
    "5 5 1\n"
    "2 3 2\n"
    "1 -1 -3\n"
    "-1/2 -2 1\n";

inline std::shared_ptr<const Arrangement> five_lines() {
  return std::make_shared<const Arrangement>(hypervert::parse_arrangement(kFiveLinesText));
}

using Matrix = std::vector<std::vector<Rational>>;

/// Laplace expansion along the first row.
inline Rational det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][c] * det(minor);
    total = (c % 2 == 0) ? total + term : total - term;
  }
  return total;
}

/// Cramer's rule for A x = b; nullopt when det A = 0.
inline std::optional<std::vector<Rational>> cramer(const Matrix& a, const std::vector<Rational>& b) {
  const Rational d = det(a);
  if (d.is_zero()) return std::nullopt;
  std::vector<Rational> x;
  for (std::size_t c = 0; c < a.size(); ++c) {
    Matrix m = a;
    for (std::size_t r = 0; r < a.size(); ++r) m[r][c] = b[r];
    x.push_back(det(m) / d);
  }
  return x;
}

/// Point where the hyperplanes of `cobasis` meet.
inline std::optional<Point> ref_vertex(const Arrangement& arr, const LabelSet& cobasis) {
  Matrix a;
  std::vector<Rational> b;
  for (Label l : cobasis) {
    a.push_back(arr.hyperplane(l).normal);
    b.push_back(arr.hyperplane(l).offset);
  }
  return cramer(a, b);
}

/// Dictionary rows by basic label: [a_ig, a_ij for co-basic j ascending].
using RefRows = std::map<Label, std::vector<Rational>>;

inline RefRows ref_dictionary(const Arrangement& arr, const LabelSet& cobasis) {
  const int d = arr.dim();
  Matrix ct(static_cast<std::size_t>(d), std::vector<Rational>(cobasis.size()));
  for (std::size_t k = 0; k < cobasis.size(); ++k) {
    for (int c = 0; c < d; ++c) {
      ct[static_cast<std::size_t>(c)][k] = arr.hyperplane(cobasis[k]).normal[static_cast<std::size_t>(c)];
    }
  }
  RefRows rows;
  for (Label i = 1; i <= arr.size(); ++i) {
    if (std::find(cobasis.begin(), cobasis.end(), i) != cobasis.end()) continue;
    const auto coef = cramer(ct, arr.hyperplane(i).normal);
    std::vector<Rational> row{arr.hyperplane(i).offset};
    for (std::size_t k = 0; k < cobasis.size(); ++k) {
      row[0] -= (*coef)[k] * arr.hyperplane(cobasis[k]).offset;
      row.push_back((*coef)[k]);
    }
    rows[i] = std::move(row);
  }
  return rows;
}

inline RefRows rows_of(const Dictionary& dict) {
  RefRows rows;
  for (std::size_t r = 0; r < dict.num_rows(); ++r) {
    const auto row = dict.coefficients().row(r);
    rows[dict.basis()[r]] = std::vector<Rational>(row.begin(), row.end());
  }
  return rows;
}

inline std::vector<Rational> q(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(Rational::parse(x));
  return out;
}

/// Every independent co-basis, by brute force over all d-subsets.
inline std::vector<LabelSet> all_cobases(const Arrangement& arr) {
  const int n = arr.size();
  const int d = arr.dim();
  std::vector<LabelSet> out;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + d, true);
  do {
    LabelSet cb;
    for (int i = 0; i < n; ++i) {
      if (pick[static_cast<std::size_t>(i)]) cb.push_back(i + 1);
    }
    if (ref_vertex(arr, cb)) out.push_back(cb);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Distinct vertices by brute force.
inline std::set<Point> ref_vertices(const Arrangement& arr) {
  std::set<Point> pts;
  for (const auto& cb : all_cobases(arr)) pts.insert(*ref_vertex(arr, cb));
  return pts;
}

/// Lexicographic minimality of the basis among all bases at the vertex.
inline bool ref_lexmin(const Arrangement& arr, const LabelSet& cobasis) {
  const Point y = *ref_vertex(arr, cobasis);
  const LabelSet basis = hypervert::complement(cobasis, arr.size());
  for (const auto& cb : all_cobases(arr)) {
    if (*ref_vertex(arr, cb) != y) continue;
    if (hypervert::complement(cb, arr.size()) < basis) return false;
  }
  return true;
}

/// The Zero rule from its definition, on reference rows.
inline std::optional<hypervert::PivotPosition> ref_zero_select(const RefRows& rows,
                                                               const LabelSet& cobasis) {
  for (std::size_t k = 0; k < cobasis.size(); ++k) {
    for (const auto& [i, row] : rows) {
      if (i < cobasis[k] && !row[k + 1].is_zero()) return hypervert::PivotPosition{i, cobasis[k]};
    }
  }
  return std::nullopt;
}

inline std::set<Point> points_of(const std::vector<hypervert::VertexRecord>& vs) {
  std::set<Point> pts;
  for (const auto& v : vs) pts.insert(v.coords);
  return pts;
}

/// Small instances for exhaustive checks: random draws with n <= 7, d <= 3
/// and small coefficients, so degenerate vertices are common.
inline std::vector<std::shared_ptr<const Arrangement>> small_population(int count) {
  std::vector<std::shared_ptr<const Arrangement>> out;
  for (int k = 0; k < count; ++k) {
    const int d = 2 + k % 2;
    const int n = 5 + k % 3;
    out.push_back(std::make_shared<const Arrangement>(
        hypervert::gen_random(d, n, static_cast<std::uint64_t>(1000 + k), 2)));
  }
  return out;
}

/// Relabeled copy, as the searches see it.
inline std::shared_ptr<const Arrangement> relabeled(const Arrangement& arr) {
  return std::make_shared<const Arrangement>(hypervert::initial_cobasis(arr).arrangement);
}

}  // namespace hvtest
