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

#include "hypervert/generators.hpp"

#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace hypervert {
namespace {

std::vector<Hyperplane> hypercube_planes(int d) {
  std::vector<Hyperplane> hps;
  for (int i = 0; i < d; ++i) {
    for (int offset : {0, 1}) {
      Hyperplane h;
      h.normal.assign(static_cast<std::size_t>(d), Rational(0));
      h.normal[static_cast<std::size_t>(i)] = Rational(1);
      h.offset = Rational(offset);
      hps.push_back(std::move(h));
    }
  }
  return hps;
}

class UniformInt {
 public:
  UniformInt(std::uint64_t seed, int bound)
      : engine_(seed), bound_(bound), range_(2 * static_cast<std::uint64_t>(bound) + 1) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    // floor(2^64 / range) * range, computed without 128-bit arithmetic.
    const std::uint64_t rem = (max % range_ + 1) % range_;
    limit_ = rem == 0 ? 0 : max - rem + 1;  // 0 means "accept everything"
  }

  std::int64_t operator()() {
    while (true) {
      const std::uint64_t u = engine_();
      if (limit_ != 0 && u >= limit_) continue;
      return static_cast<std::int64_t>(u % range_) - bound_;
    }
  }

 private:
  std::mt19937_64 engine_;
  std::int64_t bound_;
  std::uint64_t range_;
  std::uint64_t limit_;
};

}  // namespace

Arrangement gen_hypercube(int d) {
  if (d < 1) throw std::invalid_argument("hypercube needs d >= 1");
  return Arrangement(d, hypercube_planes(d));
}

Arrangement gen_cube_cone(int d) {
  if (d < 2) throw std::invalid_argument("cube-cone needs d >= 2");
  auto hps = hypercube_planes(d);
  hps.push_back({std::vector<Rational>(static_cast<std::size_t>(d), Rational(1)),
                 Rational(3, 2)});
  return Arrangement(d, std::move(hps));
}

Arrangement gen_stacked_cubes(int d, int k) {
  if (d < 1) throw std::invalid_argument("stacked cubes need d >= 1");
  if (k < 0) throw std::invalid_argument("stacked cubes need k >= 0");
  auto hps = hypercube_planes(d);
  for (int t = 2; t <= k + 1; ++t) {
    Hyperplane h;
    h.normal.assign(static_cast<std::size_t>(d), Rational(0));
    h.normal[0] = Rational(1);
    h.offset = Rational(t);
    hps.push_back(std::move(h));
  }
  return Arrangement(d, std::move(hps));
}

Arrangement gen_random(int d, int n, std::uint64_t seed, int coeff_bound) {
  if (d < 1 || n < d) throw std::invalid_argument("random arrangement needs n >= d >= 1");
  if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be >= 1");
  constexpr int kMaxDraws = 10000;
  UniformInt draw(seed, coeff_bound);
  int draws = 0;
  while (true) {
    std::vector<Hyperplane> hps;
    while (static_cast<int>(hps.size()) < n) {
      if (++draws > kMaxDraws) {
        throw std::runtime_error("random arrangement: rejection budget exceeded");
      }
      Hyperplane h;
      h.offset = Rational(draw());
      bool nonzero = false;
      for (int c = 0; c < d; ++c) {
        h.normal.emplace_back(draw());
        nonzero = nonzero || !h.normal.back().is_zero();
      }
      if (nonzero) hps.push_back(std::move(h));
    }
    try {
      return Arrangement(d, std::move(hps));
    } catch (const NoVertexError&) {
      // rank-deficient: draw a fresh instance
    }
  }
}

SignPattern SignPattern::parse(std::string_view text) {
  SignPattern p;
  for (char c : text) {
    switch (c) {
      case '+': p.signs.push_back(Side::kAbove); break;
      case '-': p.signs.push_back(Side::kBelow); break;
      case '.': p.signs.push_back(Side::kFree); break;
      default:
        throw std::invalid_argument(std::string("sign pattern: unexpected character '") + c +
                                    "'");
    }
  }
  return p;
}

SignPattern SignPattern::all_free(int n) {
  return {std::vector<Side>(static_cast<std::size_t>(n), Side::kFree)};
}

EnumerationResult filter_by_signs(const EnumerationResult& result, const Arrangement& arr,
                                  const SignPattern& pattern) {
  if (pattern.signs.size() != static_cast<std::size_t>(arr.size())) {
    throw std::invalid_argument("sign pattern has " + std::to_string(pattern.signs.size()) +
                                " entries for " + std::to_string(arr.size()) +
                                " hyperplanes");
  }
  const Arrangement user = arr.in_user_order();
  EnumerationResult out;
  out.stats = result.stats;
  out.root_cobasis = result.root_cobasis;
  for (const auto& v : result.vertices) {
    bool keep = true;
    for (std::size_t i = 0; i < pattern.signs.size() && keep; ++i) {
      if (pattern.signs[i] == Side::kFree) continue;
      const auto& h = user.hyperplane(static_cast<Label>(i + 1));
      Rational lhs;
      for (std::size_t c = 0; c < h.normal.size(); ++c) lhs += h.normal[c] * v.coords[c];
      keep = pattern.signs[i] == Side::kBelow ? lhs <= h.offset : lhs >= h.offset;
    }
    if (keep) out.vertices.push_back(v);
  }
  out.stats.vertices_emitted = out.vertices.size();
  return out;
}

}  // namespace hypervert
