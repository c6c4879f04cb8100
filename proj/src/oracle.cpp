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

#include "hypervert/oracle.hpp"

#include <algorithm>
#include <map>

#include "hypervert/linalg.hpp"

namespace hypervert {
namespace {

class SubsetWalker {
 public:
  explicit SubsetWalker(const Arrangement& arr) : arr_(arr) {}

  void run() {
    LabelSet chosen;
    walk(1, chosen, EchelonBasis(static_cast<std::size_t>(arr_.dim())));
  }

  std::map<Point, std::vector<LabelSet>>& points() { return points_; }
  std::size_t leaves() const { return leaves_; }

 private:
  void walk(Label next, LabelSet& chosen, const EchelonBasis& basis) {
    const int d = arr_.dim();
    const int n = arr_.size();
    if (static_cast<int>(chosen.size()) == d) {
      ++leaves_;
      points_[vertex_from_cobasis(arr_, chosen)].push_back(chosen);
      return;
    }
    const int missing = d - static_cast<int>(chosen.size());
    for (Label l = next; l <= n - missing + 1; ++l) {
      EchelonBasis extended = basis;
      if (!extended.try_add(arr_.hyperplane(l).normal)) continue;
      chosen.push_back(l);
      walk(l + 1, chosen, extended);
      chosen.pop_back();
    }
  }

  const Arrangement& arr_;
  std::map<Point, std::vector<LabelSet>> points_;
  std::size_t leaves_ = 0;
};

}  // namespace

std::vector<LabelSet> OracleResult::all_cobases() const {
  std::vector<LabelSet> out;
  out.reserve(cobasis_count);
  for (const auto& v : vertices) out.insert(out.end(), v.cobases.begin(), v.cobases.end());
  std::sort(out.begin(), out.end());
  return out;
}

OracleResult oracle_enumerate(const Arrangement& arr) {
  SubsetWalker walker(arr);
  walker.run();

  OracleResult result;
  result.cobasis_count = walker.leaves();
  result.vertices.reserve(walker.points().size());
  for (auto& [point, cobases] : walker.points()) {
    // Smallest basis == complement compared lexicographically.
    const LabelSet* best = nullptr;
    LabelSet best_basis;
    for (const auto& cb : cobases) {
      LabelSet basis = complement(cb, arr.size());
      if (best == nullptr || basis < best_basis) {
        best = &cb;
        best_basis = std::move(basis);
      }
    }
    OracleVertex v;
    v.record.coords = point;
    v.record.cobasis = arr.to_user(*best);
    v.record.basis = arr.to_user(best_basis);
    v.lexmin_cobasis = *best;
    v.cobases = std::move(cobases);
    result.vertices.push_back(std::move(v));
  }
  return result;
}

}  // namespace hypervert
