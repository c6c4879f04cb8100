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

#include "hypervert/dictionary.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace hypervert {
namespace {

std::atomic<bool> g_audit{false};
std::atomic<std::size_t> g_audited{0};

LabelSet sorted_swap(const LabelSet& set, Label out, Label in) {
  LabelSet result;
  result.reserve(set.size());
  for (Label l : set) {
    if (l != out) result.push_back(l);
  }
  result.insert(std::upper_bound(result.begin(), result.end(), in), in);
  return result;
}

}  // namespace

Dictionary::Dictionary(std::shared_ptr<const Arrangement> arr, LabelSet basis,
                       LabelSet cobasis, RationalMatrix coeffs)
    : arr_(std::move(arr)),
      basis_(std::move(basis)),
      cobasis_(std::move(cobasis)),
      coeffs_(std::move(coeffs)),
      slot_(static_cast<std::size_t>(arr_->size()) + 1, 0) {
  slot_[0] = ~0;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    slot_[static_cast<std::size_t>(basis_[k])] = static_cast<int>(k);
  }
  for (std::size_t k = 0; k < cobasis_.size(); ++k) {
    slot_[static_cast<std::size_t>(cobasis_[k])] = ~static_cast<int>(k);
  }
}

Dictionary Dictionary::build(std::shared_ptr<const Arrangement> arr,
                             std::span<const Label> cobasis_in) {
  const auto d = static_cast<std::size_t>(arr->dim());
  const int n = arr->size();
  LabelSet cobasis(cobasis_in.begin(), cobasis_in.end());
  std::sort(cobasis.begin(), cobasis.end());
  if (cobasis.size() != d || std::adjacent_find(cobasis.begin(), cobasis.end()) != cobasis.end() ||
      cobasis.front() < 1 || cobasis.back() > n) {
    throw PivotIndexError("co-basis must be d distinct labels in 1..n");
  }
  LabelSet basis = complement(cobasis, n);
  const std::size_t m = basis.size();

  // Solve M^T a_i = c_i for all basic i at once, where M has rows c_j
  // (j co-basic): augmented matrix [M^T | c_i ...].
  RationalMatrix aug(d, d + m);
  for (std::size_t k = 0; k < d; ++k) {
    const auto& normal = arr->hyperplane(cobasis[k]).normal;
    for (std::size_t l = 0; l < d; ++l) aug(l, k) = normal[l];
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto& normal = arr->hyperplane(basis[i]).normal;
    for (std::size_t l = 0; l < d; ++l) aug(l, d + i) = normal[l];
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && aug(p, c).is_zero()) ++p;
    if (p == d) throw DependentCobasisError("co-basis normals are linearly dependent");
    if (p != c) {
      for (std::size_t k = 0; k < aug.cols(); ++k) std::swap(aug(p, k), aug(c, k));
    }
    const Rational inv = Rational(1) / aug(c, c);
    for (std::size_t k = c; k < aug.cols(); ++k) aug(c, k) *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || aug(r, c).is_zero()) continue;
      const Rational f = aug(r, c);
      for (std::size_t k = c; k < aug.cols(); ++k) aug(r, k) -= f * aug(c, k);
    }
  }

  RationalMatrix coeffs(m, d + 1);
  for (std::size_t i = 0; i < m; ++i) {
    Rational constant = arr->hyperplane(basis[i]).offset;
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& a = aug(k, d + i);
      coeffs(i, k + 1) = a;
      if (!a.is_zero()) constant -= a * arr->hyperplane(cobasis[k]).offset;
    }
    coeffs(i, 0) = std::move(constant);
  }
  return Dictionary(std::move(arr), std::move(basis), std::move(cobasis), std::move(coeffs));
}

Dictionary pivot(const Dictionary& dict, Label r, Label s) {
  const int n = dict.arrangement().size();
  if (r < 1 || r > n || !dict.is_basic(r)) {
    throw PivotIndexError("pivot row " + std::to_string(r) + " is not basic");
  }
  if (s == kConstant) throw PivotIndexError("cannot pivot on the constant column");
  if (s < 1 || s > n || !dict.is_cobasic(s)) {
    throw PivotIndexError("pivot column " + std::to_string(s) + " is not co-basic");
  }
  const std::size_t pr = dict.row_index(r);
  const std::size_t ps = dict.col_index(s);
  const Rational& piv = dict.coeffs_(pr, ps);
  if (piv.is_zero()) {
    throw SingularPivotError("pivot entry (" + std::to_string(r) + "," + std::to_string(s) +
                             ") is zero");
  }
  const Rational inv = Rational(1) / piv;

  LabelSet basis = sorted_swap(dict.basis_, r, s);
  LabelSet cobasis = sorted_swap(dict.cobasis_, s, r);
  const std::size_t m = basis.size();
  const std::size_t d = cobasis.size();

  // Old matrix column for each new column.
  std::vector<std::size_t> old_col(d + 1, 0);
  std::size_t new_r_col = 0;
  for (std::size_t k = 0; k < d; ++k) {
    if (cobasis[k] == r) {
      new_r_col = k + 1;
    } else {
      old_col[k + 1] = dict.col_index(cobasis[k]);
    }
  }

  RationalMatrix coeffs(m, d + 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] == s) {
      for (std::size_t c = 0; c <= d; ++c) {
        coeffs(i, c) = c == new_r_col ? inv : -(dict.coeffs_(pr, old_col[c]) * inv);
      }
      continue;
    }
    const std::size_t oi = dict.row_index(basis[i]);
    const Rational& a_is = dict.coeffs_(oi, ps);
    for (std::size_t c = 0; c <= d; ++c) {
      if (c == new_r_col) {
        coeffs(i, c) = a_is * inv;
      } else if (a_is.is_zero()) {
        coeffs(i, c) = dict.coeffs_(oi, old_col[c]);
      } else {
        coeffs(i, c) = dict.coeffs_(oi, old_col[c]) - a_is * dict.coeffs_(pr, old_col[c]) * inv;
      }
    }
  }

  Dictionary out(dict.arr_, std::move(basis), std::move(cobasis), std::move(coeffs));
  if (g_audit.load(std::memory_order_relaxed)) {
    if (!is_consistent(out)) {
      throw std::logic_error("dictionary inconsistent with its arrangement after pivot (" +
                             std::to_string(r) + "," + std::to_string(s) + ")");
    }
    g_audited.fetch_add(1, std::memory_order_relaxed);
  }
  return out;
}

bool lexmin_test(const Dictionary& dict) {
  for (std::size_t i = 0; i < dict.num_rows(); ++i) {
    if (!dict.constant(i).is_zero()) continue;
    const Label row = dict.basis()[i];
    for (std::size_t k = 0; k < dict.num_cols() && dict.cobasis()[k] < row; ++k) {
      if (!dict.entry(i, k + 1).is_zero()) return false;
    }
  }
  return true;
}

bool is_consistent(const Dictionary& dict) {
  const auto& arr = dict.arrangement();
  const auto d = static_cast<std::size_t>(arr.dim());
  for (std::size_t i = 0; i < dict.num_rows(); ++i) {
    const auto& hi = arr.hyperplane(dict.basis()[i]);
    std::vector<Rational> normal(d);
    Rational constant = hi.offset;
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& a = dict.entry(i, k + 1);
      if (a.is_zero()) continue;
      const auto& hj = arr.hyperplane(dict.cobasis()[k]);
      for (std::size_t l = 0; l < d; ++l) normal[l] += a * hj.normal[l];
      constant -= a * hj.offset;
    }
    if (normal != hi.normal || constant != dict.constant(i)) return false;
  }
  return true;
}

void set_pivot_audit(bool enabled) { g_audit.store(enabled); }
bool pivot_audit_enabled() { return g_audit.load(); }
std::size_t audited_pivot_count() { return g_audited.load(); }

ObjectiveRow pivot_objective(const Dictionary& before, const ObjectiveRow& row, Label r,
                             Label s) {
  if (row.coeffs.size() != before.num_cols() + 1) {
    throw std::invalid_argument("objective row length does not match dictionary");
  }
  const std::size_t pr = before.row_index(r);
  const std::size_t ps = before.col_index(s);
  const Rational& piv = before.entry(pr, ps);
  if (piv.is_zero()) throw SingularPivotError("objective pivot on a zero entry");
  const Rational& f_s = row.coeffs[ps];
  const LabelSet cobasis = sorted_swap(before.cobasis(), s, r);

  ObjectiveRow out;
  out.coeffs.reserve(cobasis.size() + 1);
  auto transformed = [&](std::size_t old_c) {
    return row.coeffs[old_c] - f_s * before.entry(pr, old_c) / piv;
  };
  out.coeffs.push_back(transformed(0));
  for (Label j : cobasis) {
    out.coeffs.push_back(j == r ? f_s / piv : transformed(before.col_index(j)));
  }
  return out;
}

namespace {

void write_row(std::ostream& out, const std::string& lhs, std::span<const Rational> row,
               const LabelSet& cobasis) {
  out << lhs << " = " << row[0] << " x_g";
  for (std::size_t k = 0; k < cobasis.size(); ++k) {
    const Rational& a = row[k + 1];
    const Rational mag = a.sign() < 0 ? -a : a;
    out << (a.sign() < 0 ? " - " : " + ");
    if (mag != Rational(1)) out << mag << ' ';
    out << 'x' << cobasis[k];
  }
}

}  // namespace

std::string dump(const Dictionary& dict) {
  std::ostringstream out;
  for (std::size_t i = 0; i < dict.num_rows(); ++i) {
    write_row(out, "x" + std::to_string(dict.basis()[i]), dict.coefficients().row(i),
              dict.cobasis());
    out << '\n';
  }
  return out.str();
}

std::string dump(const Dictionary& dict, const ObjectiveRow& row) {
  std::ostringstream out;
  write_row(out, "x_f", row.coeffs, dict.cobasis());
  return out.str();
}

}  // namespace hypervert
