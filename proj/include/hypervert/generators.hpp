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

#include <cstdint>
#include <string_view>
#include <vector>

#include "hypervert/arrangement.hpp"
#include "hypervert/reverse_search.hpp"

namespace hypervert {

/// 2d hyperplanes y_i = 0 and y_i = 1, ordered y_1 = 0, y_1 = 1, y_2 = 0, ...
Arrangement gen_hypercube(int d);

/// The unit hypercube plus y_1 + ... + y_d = 3/2 as the last hyperplane.
Arrangement gen_cube_cone(int d);

/// The unit hypercube plus k parallel planes y_1 = 2, ..., y_1 = k + 1:
/// k + 1 unit cubes stacked along y_1, with (k + 2) 2^(d-1) vertices.
Arrangement gen_stacked_cubes(int d, int k);

/// Random integer arrangement. Coefficients are uniform in
/// [-coeff_bound, coeff_bound], drawn from std::mt19937_64 seeded with
/// `seed`: each raw 64-bit output u is rejected when
/// u >= floor(2^64 / m) * m (m = 2 * coeff_bound + 1), else maps to
/// u % m - coeff_bound. Per hyperplane the offset is drawn first, then the
/// normal c_1..c_d; a zero normal is redrawn. A rank-deficient instance is
/// discarded and drawing continues from the same stream. Degenerate draws
/// are kept.
Arrangement gen_random(int d, int n, std::uint64_t seed, int coeff_bound);

/// Side of hyperplane i a vertex must lie on.
enum class Side {
  kFree,
  kBelow,  // <c_i, y> <= b_i
  kAbove,  // <c_i, y> >= b_i
};

struct SignPattern {
  std::vector<Side> signs;  // by user label

  /// One character per hyperplane: '+' above, '-' below, '.' free.
  static SignPattern parse(std::string_view text);
  static SignPattern all_free(int n);
};

/// Keeps the vertices that satisfy every constrained side exactly. `arr` is
/// the instance in user labels.
EnumerationResult filter_by_signs(const EnumerationResult& result, const Arrangement& arr,
                                  const SignPattern& pattern);

}  // namespace hypervert
