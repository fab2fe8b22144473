// Copyright 2026 The ewlext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ewlext/game.h"

#include "ewlext/sampling.h"
#include "gtest/gtest.h"

namespace ewlext {
namespace {

TEST(GameTest, RejectsMalformedGrids) {
  EXPECT_THROW(MakeGame({}, {"a"}, {}), GameError);
  EXPECT_THROW(MakeGame({"a", "b"}, {"x"}, {{{1, 1}}}), GameError);
  EXPECT_THROW(MakeGame({"a"}, {"x", "y"}, {{{1, 1}}}), GameError);
  EXPECT_THROW(MakeGame({"a", "a"}, {"x"}, {{{1, 1}}, {{2, 2}}}), GameError);
}

TEST(GameTest, PrisonersDilemma) {
  const BimatrixGame pd = PrisonersDilemma();
  EXPECT_EQ(pd.At(0, 0), (PayoffPair{3, 3}));
  EXPECT_EQ(pd.At(0, 1), (PayoffPair{0, 5}));
  EXPECT_EQ(pd.At(1, 0), (PayoffPair{5, 0}));
  EXPECT_EQ(pd.At(1, 1), (PayoffPair{1, 1}));
  EXPECT_EQ(pd.RowLabels(), (std::vector<std::string>{"C", "D"}));
}

TEST(VariantTest, SwapsMoveLabelsWithStrategies) {
  const BimatrixGame pd = PrisonersDilemma();
  const BimatrixGame rows = Variant(pd, VariantKind::kRowSwap);
  EXPECT_EQ(rows.RowLabels(), (std::vector<std::string>{"D", "C"}));
  EXPECT_EQ(rows.At(0, 0), (PayoffPair{5, 0}));
  const BimatrixGame cols = Variant(pd, VariantKind::kColSwap);
  EXPECT_EQ(cols.At(0, 0), (PayoffPair{0, 5}));
  const BimatrixGame both = Variant(pd, VariantKind::kRowColSwap);
  EXPECT_EQ(both.At(0, 0), (PayoffPair{1, 1}));
  EXPECT_EQ(both.At(1, 1), (PayoffPair{3, 3}));
}

TEST(VariantTest, Involution) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const BimatrixGame g = RandomGame(rng);
    for (VariantKind k : kAllVariantKinds) {
      EXPECT_EQ(Variant(Variant(g, k), k), g);
    }
  }
}

TEST(VariantTest, RequiresTwoByTwo) {
  const BimatrixGame g = MakeGame({"a"}, {"x"}, {{{1, 1}}});
  EXPECT_THROW(Variant(g, VariantKind::kRowSwap), GameError);
}

TEST(IsomorphismTest, VariantsAreIsomorphicToSource) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const BimatrixGame g = RandomGenericGame(rng);
    for (VariantKind k : kAllVariantKinds) {
      const auto phi = FindIsomorphism(g, Variant(g, k));
      ASSERT_TRUE(phi.has_value());
      EXPECT_TRUE(IsStrongIsomorphism(g, Variant(g, k), *phi));
    }
  }
}

// A 3x3 game and its image under rows (0->1, 1->2, 2->0) and columns
// (0->2, 1->1, 2->0).
TEST(IsomorphismTest, FindsThreeByThreePermutation) {
  const BimatrixGame a = MakeGame(
      {"a", "b", "c"}, {"x", "y", "z"},
      {{{1, 2}, {3, 4}, {5, 6}}, {{7, 8}, {9, 10}, {11, 12}},
       {{13, 14}, {15, 16}, {17, 18}}});
  const std::vector<std::size_t> rows{1, 2, 0}, cols{2, 1, 0};
  BimatrixGame::Grid grid(3, std::vector<PayoffPair>(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) grid[rows[i]][cols[j]] = a.At(i, j);
  }
  const BimatrixGame b = MakeGame({"p", "q", "r"}, {"s", "t", "u"}, grid);
  const auto phi = FindIsomorphism(a, b);
  ASSERT_TRUE(phi.has_value());
  EXPECT_EQ(phi->row_map, rows);
  EXPECT_EQ(phi->col_map, cols);
}

TEST(IsomorphismTest, RejectsPayoffChangeAndShapeMismatch) {
  const BimatrixGame pd = PrisonersDilemma();
  EXPECT_FALSE(FindIsomorphism(pd, PrisonersDilemma(3, 0, 6, 1)).has_value());
  // Swapping players' payoffs is not a strategy relabeling.
  const BimatrixGame g = MakeGame({"a", "b"}, {"x", "y"},
                                  {{{1, 0}, {2, 0}}, {{3, 0}, {4, 0}}});
  const BimatrixGame h = MakeGame({"a", "b"}, {"x", "y"},
                                  {{{0, 1}, {0, 2}}, {{0, 3}, {0, 4}}});
  EXPECT_FALSE(FindIsomorphism(g, h).has_value());
  EXPECT_FALSE(
      FindIsomorphism(pd, MakeGame({"a"}, {"x", "y"}, {{{1, 1}, {2, 2}}}))
          .has_value());
}

TEST(IsomorphismTest, FloatGamesUseTolerance) {
  const RealGame a({"a", "b"}, {"x", "y"},
                   {{{1.0, 2.0}, {3.0, 4.0}}, {{5.0, 6.0}, {7.0, 8.0}}});
  const RealGame b({"a", "b"}, {"x", "y"},
                   {{{5.0, 6.0}, {7.0, 8.0 + 1e-12}}, {{1.0, 2.0}, {3.0, 4.0}}});
  const auto phi = FindIsomorphism(a, b);
  ASSERT_TRUE(phi.has_value());
  EXPECT_EQ(phi->row_map, (std::vector<std::size_t>{1, 0}));
}

TEST(GenericTest, DistinctPayoffsPerPlayer) {
  EXPECT_TRUE(IsGeneric(PrisonersDilemma()));
  EXPECT_FALSE(IsGeneric(MakeGame({"a", "b"}, {"x", "y"},
                                  {{{1, 4}, {2, 3}}, {{1, 1}, {4, 2}}})));
  EXPECT_TRUE(IsGeneric(MakeGame({"a", "b"}, {"x", "y"},
                                 {{{1, 4}, {2, 3}}, {{3, 1}, {4, 2}}})));
  Rng rng(9);
  for (int t = 0; t < 50; ++t) EXPECT_TRUE(IsGeneric(RandomGenericGame(rng)));
}

}  // namespace
}  // namespace ewlext
