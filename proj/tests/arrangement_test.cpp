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

#include <gtest/gtest.h>

#include "hypervert/arrangement.hpp"
#include "hypervert/generators.hpp"
#include "hypervert/oracle.hpp"
#include "support.hpp"

namespace hypervert {
namespace {

using hvtest::q;

TEST(Parse, FiveLinesInstance) {
  const auto arr = hvtest::five_lines();
  EXPECT_EQ(arr->dim(), 2);
  EXPECT_EQ(arr->size(), 5);
  EXPECT_EQ(arr->hyperplane(1).normal, q({"1", "3"}));
  EXPECT_EQ(arr->hyperplane(1).offset, Rational(4));
  EXPECT_EQ(arr->hyperplane(5).offset, Rational(-1, 2));
  EXPECT_EQ(arr->label_map(), (std::vector<Label>{1, 2, 3, 4, 5}));
}

TEST(Parse, SingleHyperplaneLine) {
  const Arrangement arr = parse_arrangement("1 1\n0 1\n");
  EXPECT_EQ(arr.size(), 1);
  const OracleResult r = oracle_enumerate(arr);
  ASSERT_EQ(r.count(), 1u);
  EXPECT_EQ(r.vertices[0].record.coords, q({"0"}));
}

struct BadInput {
  const char* text;
  std::size_t line;
  std::size_t column;
};

TEST(Parse, ReportsLineAndColumn) {
  const BadInput cases[] = {
      {"", 1, 1},
      {"2\n", 1, 1},
      {"2 2 7\n", 1, 5},
      {"0 2\n", 1, 1},
      {"2 2\n1 0 1\n", 3, 1},
      {"2 1\n1 2\n", 2, 4},
      {"2 1\n1 2 3 4\n", 2, 7},
      {"2 1\n1 x 3\n", 2, 3},
      {"2 1\n1 0 0\n", 2, 3},
      {"# c\n2 1\n  1 1/0 1\n", 3, 5},
      {"1 1\n0 1\n0 2\n", 3, 1},
  };
  for (const auto& c : cases) {
    try {
      parse_arrangement(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text << " -> " << e.what();
      EXPECT_EQ(e.column(), c.column) << c.text << " -> " << e.what();
    }
  }
}

TEST(Parse, RankDeficientInstanceHasNoVertex) {
  EXPECT_THROW(parse_arrangement("2 2\n0 1 1\n1 2 2\n"), NoVertexError);
}

TEST(Parse, RoundTrip) {
  for (const auto& arr : {*hvtest::five_lines(), gen_cube_cone(3), gen_random(3, 8, 5, 9)}) {
    const std::string text = format_arrangement(arr);
    EXPECT_EQ(parse_arrangement(text), arr);
    EXPECT_EQ(format_arrangement(parse_arrangement(text)), text);
  }
}

TEST(Arrangement, ValidatesConstruction) {
  using V = std::vector<Rational>;
  EXPECT_THROW(Arrangement(2, {{V{1}, Rational(0)}, {V{0, 1}, Rational(0)}}),
               std::invalid_argument);
  EXPECT_THROW(Arrangement(1, {{V{0}, Rational(0)}}), std::invalid_argument);
  EXPECT_THROW(Arrangement(1, {{V{1}, Rational(0)}}, {2}), std::invalid_argument);
}

TEST(Vertex, FiveLinesCobases) {
  const auto arr = hvtest::five_lines();
  for (const LabelSet& cb : hvtest::all_cobases(*arr)) {
    EXPECT_EQ(vertex_from_cobasis(*arr, cb), *hvtest::ref_vertex(*arr, cb));
  }
  EXPECT_EQ(vertex_from_cobasis(*arr, LabelSet{3, 4}), q({"8/7", "-5/7"}));
  EXPECT_EQ(vertex_from_cobasis(*arr, LabelSet{1, 2}), q({"11/14", "15/14"}));
  EXPECT_THROW(vertex_from_cobasis(*arr, LabelSet{1, 4}), DependentCobasisError);
  EXPECT_THROW(vertex_from_cobasis(*arr, LabelSet{1}), std::invalid_argument);
}

TEST(Vertex, HypercubeOriginCobasis) {
  const Arrangement cube = gen_hypercube(4);
  EXPECT_EQ(vertex_from_cobasis(cube, LabelSet{1, 3, 5, 7}), q({"0", "0", "0", "0"}));
}

TEST(Oracle, FiveLines) {
  const auto arr = hvtest::five_lines();
  const OracleResult r = oracle_enumerate(*arr);
  EXPECT_EQ(r.cobasis_count, 9u);
  EXPECT_EQ(r.all_cobases(), hvtest::all_cobases(*arr));
  std::set<Point> expected{q({"11/14", "15/14"}), q({"8/7", "-5/7"}), q({"-2/7", "10/7"}),
                           q({"3/7", "5/14"}), q({"1/14", "-5/14"})};
  EXPECT_EQ(hvtest::points_of([&] {
              std::vector<VertexRecord> out;
              for (const auto& v : r.vertices) out.push_back(v.record);
              return out;
            }()),
            expected);
  for (const auto& v : r.vertices) {
    if (v.record.coords == q({"11/14", "15/14"})) {
      EXPECT_EQ(v.cobases, (std::vector<LabelSet>{{1, 2}, {1, 5}, {2, 5}}));
      EXPECT_EQ(v.record.cobasis, (LabelSet{2, 5}));
      EXPECT_EQ(v.record.basis, (LabelSet{1, 3, 4}));
    }
  }
}

TEST(Oracle, AgreesWithBruteForceAndIsLexMin) {
  auto population = hvtest::small_population(20);
  population.push_back(hvtest::five_lines());
  for (const auto& arr : population) {
    const OracleResult r = oracle_enumerate(*arr);
    EXPECT_EQ(r.all_cobases(), hvtest::all_cobases(*arr));
    std::set<Point> pts;
    for (const auto& v : r.vertices) {
      pts.insert(v.record.coords);
      EXPECT_TRUE(hvtest::ref_lexmin(*arr, v.lexmin_cobasis));
      for (const auto& cb : v.cobases) {
        EXPECT_EQ(*hvtest::ref_vertex(*arr, cb), v.record.coords);
      }
    }
    EXPECT_EQ(pts, hvtest::ref_vertices(*arr));
    EXPECT_EQ(pts.size(), r.count());
  }
}

TEST(Oracle, HypercubeSeven) { EXPECT_EQ(oracle_enumerate(gen_hypercube(7)).count(), 128u); }

TEST(Initialization, FiveLinesKeepsLabels) {
  const auto init = initial_cobasis(*hvtest::five_lines());
  EXPECT_EQ(init.selected, (LabelSet{1, 2}));
  EXPECT_EQ(init.cobasis, (LabelSet{1, 2}));
  EXPECT_EQ(init.arrangement, *hvtest::five_lines());
}

TEST(Initialization, SkipsDependentNormals) {
  const auto cube = initial_cobasis(gen_hypercube(2));
  EXPECT_EQ(cube.selected, (LabelSet{1, 3}));
  EXPECT_EQ(cube.arrangement.label_map(), (std::vector<Label>{1, 3, 2, 4}));

  const auto dup = initial_cobasis(parse_arrangement("2 3\n1 1 0\n1 1 0\n0 0 1\n"));
  EXPECT_EQ(dup.selected, (LabelSet{1, 3}));
  EXPECT_EQ(dup.arrangement.hyperplane(2).normal, q({"0", "1"}));
  EXPECT_EQ(dup.arrangement.to_user(LabelSet{2, 3}), (LabelSet{2, 3}));
  EXPECT_EQ(dup.arrangement.in_user_order(), parse_arrangement("2 3\n1 1 0\n1 1 0\n0 0 1\n"));
}

TEST(Initialization, RootIsLexMinCobasis) {
  for (const auto& arr : hvtest::small_population(20)) {
    const auto init = initial_cobasis(*arr);
    const auto cobases = hvtest::all_cobases(init.arrangement);
    ASSERT_FALSE(cobases.empty());
    EXPECT_EQ(cobases.front(), init.cobasis);
    EXPECT_TRUE(is_independent(init.arrangement, init.cobasis));
  }
}

TEST(Complement, WithinRange) {
  EXPECT_EQ(complement(LabelSet{2, 5}, 5), (LabelSet{1, 3, 4}));
  EXPECT_EQ(complement(LabelSet{}, 2), (LabelSet{1, 2}));
}

}  // namespace
}  // namespace hypervert
