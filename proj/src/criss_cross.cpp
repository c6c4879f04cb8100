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

#include "hypervert/criss_cross.hpp"

#include <limits>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <tuple>

#include "hypervert/oracle.hpp"

namespace hypervert {

ObjectiveDictionary attach_objective(const Dictionary& dict) {
  std::vector<Rational> coeffs(dict.num_cols() + 1, Rational(-1));
  coeffs[0] = Rational(0);
  return {dict, ObjectiveRow{std::move(coeffs)}};
}

ObjectiveDictionary attach_objective(const Dictionary& dict, std::vector<Rational> coeffs) {
  if (coeffs.size() != dict.num_cols() + 1) {
    throw std::invalid_argument("objective needs d + 1 coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  return {dict, ObjectiveRow{std::move(coeffs)}};
}

ObjectiveDictionary pivot(const ObjectiveDictionary& dict, Label r, Label s) {
  Dictionary next = pivot(dict.base, r, s);
  ObjectiveRow row = pivot_objective(dict.base, dict.objective, r, s);
  return {std::move(next), std::move(row)};
}

ObjectiveRow carry_objective(const Dictionary& target, const LabelSet& reference_cobasis,
                             const ObjectiveRow& reference) {
  if (reference.coeffs.size() != reference_cobasis.size() + 1) {
    throw std::invalid_argument("reference objective length mismatch");
  }
  ObjectiveRow out;
  out.coeffs.assign(target.num_cols() + 1, Rational(0));
  out.coeffs[0] = reference.coeffs[0];
  for (std::size_t k = 0; k < reference_cobasis.size(); ++k) {
    const Rational& w = reference.coeffs[k + 1];
    if (w.is_zero()) continue;
    const Label j = reference_cobasis[k];
    if (target.is_cobasic(j)) {
      out.coeffs[target.col_index(j)] += w;
    } else {
      const auto row = target.coefficients().row(target.row_index(j));
      for (std::size_t c = 0; c < row.size(); ++c) out.coeffs[c] += w * row[c];
    }
  }
  return out;
}

CrissCrossSelection cc_select(const ObjectiveDictionary& od) {
  const Dictionary& dict = od.base;
  const auto& f = od.objective.coeffs;
  const int n = dict.arrangement().size();
  for (Label i = 1; i <= n; ++i) {
    if (dict.is_basic(i)) {
      if (dict.at(i, kConstant).sign() >= 0) continue;
      for (Label s : dict.cobasis()) {
        if (dict.at(i, s).sign() > 0) {
          return {CrissCrossSelection::Kind::kPivot, {i, s}, i};
        }
      }
      return {CrissCrossSelection::Kind::kNoPartner, {}, i};
    }
    if (f[dict.col_index(i)].sign() <= 0) continue;
    for (Label r : dict.basis()) {
      if (dict.at(r, i).sign() < 0) {
        return {CrissCrossSelection::Kind::kPivot, {r, i}, i};
      }
    }
    return {CrissCrossSelection::Kind::kNoPartner, {}, i};
  }
  return {};
}

namespace {

bool valid_entry(const Dictionary& dict, Label s, Label r) {
  const int n = dict.arrangement().size();
  return s >= 1 && s <= n && r >= 1 && r <= n && dict.is_basic(s) && dict.is_cobasic(r);
}

}  // namespace

bool cc_reverse_af(const ObjectiveDictionary& od, Label s, Label r) {
  const Dictionary& dict = od.base;
  if (!valid_entry(dict, s, r)) return false;
  const Rational& a_sr = dict.at(s, r);
  const Rational& f_r = od.objective.coeffs[dict.col_index(r)];

  if (dict.at(s, kConstant).sign() > 0 && a_sr.sign() > 0) {
    bool ok = true;
    for (Label j : dict.cobasis()) {
      if (j >= s) break;
      if (dict.at(s, j).sign() < 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  if (f_r.sign() < 0 && a_sr.sign() < 0) {
    for (Label i : dict.basis()) {
      if (i >= r) break;
      if (dict.at(i, r).sign() > 0) return false;
    }
    return true;
  }
  return false;
}

bool cc_reverse_iff(const ObjectiveDictionary& od, Label s, Label r) {
  const Dictionary& dict = od.base;
  if (!valid_entry(dict, s, r)) return false;
  const auto& f = od.objective.coeffs;
  const Rational& a_sr = dict.at(s, r);
  const Rational& a_sg = dict.at(s, kConstant);
  const Rational& f_r = f[dict.col_index(r)];
  auto f_at = [&](Label j) -> const Rational& { return f[dict.col_index(j)]; };

  // (a): after the pivot x_r is the smallest infeasible variable and row r
  // picks column s.
  auto case_a = [&] {
    if (a_sg.sign() <= 0 || a_sr.sign() <= 0) return false;
    for (Label j : dict.cobasis()) {
      if (j >= s) break;
      if (dict.at(s, j).sign() < 0) return false;
    }
    for (Label j = 1; j < r; ++j) {
      if (dict.is_basic(j)) {
        if (dict.at(j, kConstant) * a_sr < dict.at(j, r) * a_sg) return false;
      } else if (f_r * dict.at(s, j) < f_at(j) * a_sr) {
        return false;
      }
    }
    return !(s < r) || f_r.sign() <= 0;
  };
  // (b): after the pivot x_s is the smallest infeasible variable and column
  // s picks row r.
  auto case_b = [&] {
    if (f_r.sign() >= 0 || a_sr.sign() >= 0) return false;
    for (Label i : dict.basis()) {
      if (i >= r) break;
      if (dict.at(i, r).sign() > 0) return false;
    }
    for (Label i = 1; i < s; ++i) {
      if (dict.is_basic(i)) {
        if (dict.at(i, r) * a_sg < dict.at(i, kConstant) * a_sr) return false;
      } else if (f_at(i) * a_sr < f_r * dict.at(s, i)) {
        return false;
      }
    }
    return !(r < s) || a_sg.sign() >= 0;
  };
  return case_a() || case_b();
}

std::size_t default_step_budget(int n, int d) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::size_t binom = 1;
  for (int k = 1; k <= d; ++k) {
    const auto num = static_cast<std::size_t>(n - d + k);
    if (binom > kMax / num) return kMax;
    binom = binom * num / static_cast<std::size_t>(k);
  }
  const auto scale = static_cast<std::size_t>(10) * static_cast<std::size_t>(n);
  return binom > kMax / scale ? kMax : binom * scale;
}

namespace {

class CrissCrossSearch {
 public:
  CrissCrossSearch(std::shared_ptr<const Arrangement> arr, ReverseMode mode,
                   const CrissCrossOptions& options)
      : arr_(std::move(arr)),
        mode_(mode),
        budget_(options.step_budget ? options.step_budget
                                    : default_step_budget(arr_->size(), arr_->dim())) {
    if (options.instrument) out_.enumeration.trace.emplace();
    reference_cobasis_.resize(static_cast<std::size_t>(arr_->dim()));
    for (std::size_t k = 0; k < reference_cobasis_.size(); ++k) {
      reference_cobasis_[k] = static_cast<Label>(k + 1);
    }
    reference_ = attach_objective(Dictionary::build(arr_, reference_cobasis_)).objective;
    out_.enumeration.root_cobasis = arr_->to_user(reference_cobasis_);
  }

  CrissCrossResult run() {
    // Original mode also starts from the initial dictionary, terminal or
    // not, ahead of the terminal ones. Complemented mode needs only the
    // terminal roots: every other dictionary lies in exactly one of their
    // trees.
    std::vector<ObjectiveDictionary> roots;
    if (mode_ == ReverseMode::kOriginal) {
      Dictionary dict = Dictionary::build(arr_, reference_cobasis_);
      ObjectiveDictionary od{std::move(dict), reference_};
      if (cc_select(od).is_pivot()) {
        out_.roots.push_back(arr_->to_user(od.base.cobasis()));
        roots.push_back(std::move(od));
      }
    }
    for (const auto& cb : oracle_enumerate(*arr_).all_cobases()) {
      Dictionary dict = Dictionary::build(arr_, cb);
      ObjectiveRow row = carry_objective(dict, reference_cobasis_, reference_);
      ObjectiveDictionary od{std::move(dict), std::move(row)};
      if (!cc_select(od).is_pivot()) {
        out_.roots.push_back(arr_->to_user(od.base.cobasis()));
        roots.push_back(std::move(od));
      }
    }
    for (auto& root : roots) {
      if (!search_from(std::move(root))) break;
    }
    out_.enumeration.stats.vertices_emitted = out_.enumeration.vertices.size();
    return std::move(out_);
  }

 private:
  using State = std::tuple<LabelSet, std::size_t, std::size_t>;

  // Returns false when the whole run must stop (cycle or budget).
  bool search_from(ObjectiveDictionary root) {
    root_ = root.base.cobasis();
    dict_ = std::move(root);
    depth_ = 0;
    col_ = 0;
    row_ = 0;
    visit();
    while (true) {
      if (descend()) {
        if (!after_step()) return false;
        continue;
      }
      if (depth_ == 0 && dict_->base.cobasis() == root_) return true;
      const auto sel = cc_select(*dict_);
      if (!sel.is_pivot()) return true;
      const Label up_row = sel.position.row;
      const Label up_col = sel.position.col;
      dict_ = pivot(*dict_, up_row, up_col);
      ++out_.enumeration.stats.pivots;
      if (depth_ > 0) --depth_;
      col_ = dict_->base.col_index(up_row) - 1;
      row_ = dict_->base.row_index(up_col) + 1;
      if (!after_step()) return false;
    }
  }

  bool descend() {
    const auto& basis = dict_->base.basis();
    const auto& cobasis = dict_->base.cobasis();
    for (std::size_t c = col_; c < cobasis.size(); ++c) {
      for (std::size_t i = (c == col_ ? row_ : 0); i < basis.size(); ++i) {
        ++out_.enumeration.stats.reverse_tests;
        const bool valid = mode_ == ReverseMode::kOriginal
                               ? cc_reverse_af(*dict_, basis[i], cobasis[c])
                               : cc_reverse_iff(*dict_, basis[i], cobasis[c]);
        if (out_.enumeration.trace) {
          out_.enumeration.trace->tests.push_back({cobasis, {basis[i], cobasis[c]}, valid});
        }
        if (!valid) continue;
        dict_ = pivot(*dict_, basis[i], cobasis[c]);
        ++out_.enumeration.stats.pivots;
        ++depth_;
        col_ = 0;
        row_ = 0;
        visit();
        return true;
      }
    }
    return false;
  }

  // Budget and cycle bookkeeping after every pivot.
  bool after_step() {
    ++steps_;
    if (mode_ == ReverseMode::kOriginal) {
      State state{dict_->base.cobasis(), col_, row_};
      const auto [it, fresh] = states_.emplace(std::move(state), history_.size());
      history_.push_back(dict_->base.cobasis());
      if (!fresh) {
        auto& cycle = out_.cycle;
        cycle.detected = true;
        cycle.steps_before_detection = steps_;
        for (std::size_t k = it->second; k < history_.size(); ++k) {
          cycle.cycle_cobases.push_back(arr_->to_user(history_[k]));
        }
        return false;
      }
    }
    if (steps_ >= budget_) {
      out_.budget_exceeded = true;
      return false;
    }
    return true;
  }

  void visit() {
    auto& stats = out_.enumeration.stats;
    stats.record_visit(depth_);
    const auto& cobasis = dict_->base.cobasis();
    bool first_visit = true;
    if (mode_ == ReverseMode::kOriginal) first_visit = visited_.insert(cobasis).second;
    if (auto& trace = out_.enumeration.trace) {
      if (!shadow_.insert(cobasis).second) ++trace->revisits;
      trace->visited.push_back(cobasis);
      trace->depths.push_back(depth_);
    }
    ++stats.lexmin_tests;
    if (first_visit && lexmin_test(dict_->base)) {
      out_.enumeration.vertices.push_back(make_record(dict_->base));
    }
  }

  std::shared_ptr<const Arrangement> arr_;
  ReverseMode mode_;
  std::size_t budget_;
  LabelSet reference_cobasis_;
  ObjectiveRow reference_;
  CrissCrossResult out_;

  std::optional<ObjectiveDictionary> dict_;
  LabelSet root_;
  std::size_t depth_ = 0;
  std::size_t col_ = 0;
  std::size_t row_ = 0;
  std::size_t steps_ = 0;

  // Original mode only. The walk itself keeps no memory; these stop and
  // diagnose it.
  std::map<State, std::size_t> states_;
  std::vector<LabelSet> history_;
  std::set<LabelSet> visited_;
  std::set<LabelSet> shadow_;  // instrumented runs only
};

}  // namespace

CrissCrossResult enumerate_cc(const Arrangement& arr, ReverseMode mode,
                              const CrissCrossOptions& options) {
  auto init = initial_cobasis(arr);
  auto relabeled = std::make_shared<const Arrangement>(std::move(init.arrangement));
  return CrissCrossSearch(std::move(relabeled), mode, options).run();
}

}  // namespace hypervert
