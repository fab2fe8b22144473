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

#include "ewlext/io.h"

#include "ewlext/extension.h"
#include "ewlext/nash.h"
#include "ewlext/sampling.h"
#include "ewlext/sweep.h"
#include "gtest/gtest.h"

namespace ewlext {
namespace {

TEST(GameJsonTest, RoundTrip) {
  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const BimatrixGame g = RandomGame(rng, 1 + t % 3, 1 + t % 2);
    const std::string text = GameToJson(g).dump();
    const BimatrixGame back = ParseGame(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(GameToJson(back).dump(), text);
  }
}

TEST(GameJsonTest, AcceptsNumbersAndFractionStrings) {
  const BimatrixGame g = ParseGame(
      R"({"rows":["C","D"],"cols":["C","D"],)"
      R"("payoffs":[[[3,"3"],[0,5]],[["5",0],["1/2","0.25"]]]})");
  EXPECT_EQ(g.At(1, 1), (PayoffPair{Rational(1, 2), Rational(1, 4)}));
  EXPECT_EQ(g.At(0, 0), (PayoffPair{3, 3}));
}

TEST(GameJsonTest, RejectsMalformedDocuments) {
  for (const char* bad : {
           "",
           "[]",
           R"({"rows":["C"],"cols":["C"]})",
           R"({"rows":["C"],"cols":["C"],"payoffs":[[[1]]]})",
           R"({"rows":["C"],"cols":["C"],"payoffs":[[[0.5,1]]]})",
           R"({"rows":["C"],"cols":["C"],"payoffs":[[["x",1]]]})",
           R"({"rows":["C"],"cols":["C"],"payoffs":[[[1,1],[2,2]]]})",
           R"({"rows":["C","C"],"cols":["C"],"payoffs":[[[1,1]],[[2,2]]]})",
           R"({"rows":[1],"cols":["C"],"payoffs":[[[1,1]]]})",
           R"({"rows":["C"],"cols":["C"],"payoffs":[[[1,1]]],"exact":"yes"})",
       }) {
    EXPECT_THROW(ParseGameDocument(bad), std::invalid_argument) << bad;
  }
}

TEST(ExtendedJsonTest, CarriesParamsAndClass) {
  const ExtendedGame ext = BuildExtension(
      PrisonersDilemma(), UnitaryParams::Exact(Rational(1, 2), Rational(1, 2),
                                               Rational(1, 2)));
  const Json j = ExtendedGameToJson(ext);
  EXPECT_EQ(j["params"]["theta"], "1/2pi");
  EXPECT_EQ(j["params"]["alpha"], "1/2pi");
  EXPECT_EQ(j["class"], "TypeII");
  EXPECT_EQ(j["exact"], true);
  EXPECT_EQ(j["payoffs"][2][2][0], "9/4");
  const GameDocument doc = ParseGameDocument(j.dump());
  EXPECT_TRUE(doc.exact);
  EXPECT_EQ(doc.game, *ext.exact_game);
}

TEST(ExtendedJsonTest, FloatExtensionIsMarkedInexact) {
  const ExtendedGame ext =
      BuildExtension(PrisonersDilemma(), UnitaryParams::Float(1.0, 0.3, 0.2));
  const Json j = ExtendedGameToJson(ext);
  EXPECT_EQ(j["exact"], false);
  EXPECT_EQ(j["class"], "NonInvariant");
  const GameDocument doc = ParseGameDocument(j.dump());
  EXPECT_FALSE(doc.exact);
  ASSERT_TRUE(doc.real_game.has_value());
  EXPECT_EQ(*doc.real_game, ext.real_game);  // bit-for-bit
  const RealGame shown = ToReal(doc.game);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_NEAR(shown.RowPayoff(i, k), ext.real_game.RowPayoff(i, k), 1e-12);
    }
  }
}

TEST(ReportTest, JsonAndTextUseFractions) {
  const BimatrixGame g = MakeGame({"H", "T"}, {"H", "T"},
                                  {{{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}});
  const auto report = SupportEnumeration(g);
  const Json j = ReportToJson(report, g);
  EXPECT_EQ(j["mixed"][0]["p1"][0], "1/2");
  EXPECT_EQ(j["degenerate"], false);
  EXPECT_NE(FormatReport(report, g).find("1/2"), std::string::npos);
}

TEST(SweepTest, GridIsSortedAndCsvHasFixedColumns) {
  SweepOptions options;
  options.thetas = {Angle::PiMultiple(Rational(1, 2)),
                    Angle::PiMultiple(Rational(1, 4))};
  options.phase_steps = 4;
  const auto grid = SweepGrid(options);
  ASSERT_EQ(grid.size(), 32);
  EXPECT_EQ(grid.front().theta(), Angle::PiMultiple(Rational(1, 4)));
  const auto rows = Sweep(PrisonersDilemma(), options);
  const std::string csv = SweepCsv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "theta,alpha,beta,class,n_pure,n_mixed,payoff1,payoff2");
  EXPECT_NE(csv.find("1/2pi,1/2pi,1/2pi,TypeII,0,1,9/4,9/4"), std::string::npos);
  EXPECT_NE(csv.find("1/4pi,0,0,NonInvariant,,,,"), std::string::npos);
}

TEST(SweepTest, ParallelMatchesSerialAndFloatSolveFillsRows) {
  SweepOptions options;
  options.thetas = {Angle::PiMultiple(Rational(1, 4)),
                    Angle::PiMultiple(Rational(1, 2))};
  options.allow_float_solve = true;
  const std::string a = SweepCsv(Sweep(PrisonersDilemma(), options));
  EXPECT_EQ(a, SweepCsv(SweepSerial(PrisonersDilemma(), options)));
  EXPECT_EQ(a.find(",,,,"), std::string::npos);
}

}  // namespace
}  // namespace ewlext
