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

#include "ewlext/ewl.h"

#include <cmath>
#include <numbers>

#include "ewlext/sampling.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace ewlext {
namespace {

constexpr double kTol = 1e-12;

void ExpectMatrixNear(const ComplexMatrix2& m, const oracle::Mat2& want) {
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      EXPECT_NEAR(std::abs(m(r, c) - want[r][c]), 0.0, kTol) << r << "," << c;
    }
  }
}

StateVector4 Ket(int index) {
  StateVector4 s;
  s.amplitudes[index] = 1.0;
  return s;
}

TEST(UnitaryTest, NamedStrategies) {
  const oracle::C i(0, 1);
  ExpectMatrixNear(UnitaryMatrix(UnitaryParams::Identity()),
                   {{{1, 0}, {0, 1}}});
  ExpectMatrixNear(UnitaryMatrix(UnitaryParams::FlipX()), {{{0, i}, {i, 0}}});
  ExpectMatrixNear(UnitaryMatrix(UnitaryParams::Q()), {{{i, 0}, {0, -i}}});
}

TEST(UnitaryTest, MatchesReferenceAndIsUnitary) {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const UnitaryParams p = RandomParams(rng);
    const ComplexMatrix2 u = UnitaryMatrix(p);
    ExpectMatrixNear(u, oracle::U(p.theta().ToRadians(), p.alpha().ToRadians(),
                                  p.beta().ToRadians()));
    const ComplexMatrix2 uu = Multiply(Adjoint(u), u);
    ExpectMatrixNear(uu, {{{1, 0}, {0, 1}}});
    // Determinant one: U is in SU(2).
    EXPECT_NEAR(std::abs(u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0) - 1.0), 0.0, kTol);
  }
}

TEST(FinalStateTest, ClassicalStrategiesGiveBasisStates) {
  const auto id = UnitaryParams::Identity();
  const auto x = UnitaryParams::FlipX();
  EXPECT_TRUE(SameUpToPhase(FinalState(id, id), Ket(0)));
  EXPECT_TRUE(SameUpToPhase(FinalState(id, x), Ket(1)));
  EXPECT_TRUE(SameUpToPhase(FinalState(x, id), Ket(2)));
  EXPECT_TRUE(SameUpToPhase(FinalState(x, x), Ket(3)));
}

TEST(FinalStateTest, QAgainstQCollapsesToZeroZero) {
  const auto q = UnitaryParams::Q();
  const oracle::Vec4 ref =
      oracle::State(oracle::U(0, std::numbers::pi / 2, 0),
                    oracle::U(0, std::numbers::pi / 2, 0));
  EXPECT_NEAR(std::norm(ref[0]), 1.0, kTol);
  EXPECT_TRUE(SameUpToPhase(FinalState(q, q), Ket(0)));
  EXPECT_FALSE(SameUpToPhase(FinalState(q, q), Ket(3)));
  EXPECT_TRUE(SameUpToPhase(FinalState(q, UnitaryParams::Identity()), Ket(3)));
  EXPECT_TRUE(SameUpToPhase(FinalState(q, UnitaryParams::FlipX()), Ket(2)));
  EXPECT_TRUE(SameUpToPhase(FinalState(UnitaryParams::FlipX(), q), Ket(1)));
}

TEST(FinalStateTest, MatchesKroneckerReference) {
  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    const UnitaryParams a = RandomParams(rng), b = RandomParams(rng);
    const StateVector4 s = FinalState(a, b);
    const oracle::Vec4 ref = oracle::State(
        oracle::U(a.theta().ToRadians(), a.alpha().ToRadians(),
                  a.beta().ToRadians()),
        oracle::U(b.theta().ToRadians(), b.alpha().ToRadians(),
                  b.beta().ToRadians()));
    for (int k = 0; k < 4; ++k) {
      EXPECT_NEAR(std::abs(s.amplitudes[k] - ref[k]), 0.0, kTol);
    }
    EXPECT_NEAR(s.NormSquared(), 1.0, kTol);
  }
}

TEST(PayoffTest, ClosedFormMatchesStatevector) {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const BimatrixGame g = RandomGame(rng);
    for (int s = 0; s < 50; ++s) {
      const UnitaryParams a = RandomParams(rng), b = RandomParams(rng);
      const auto closed = ClosedFormPayoff(a, b, g);
      const auto ref = oracle::StatePayoff(
          oracle::State(oracle::U(a.theta().ToRadians(), a.alpha().ToRadians(),
                                  a.beta().ToRadians()),
                        oracle::U(b.theta().ToRadians(), b.alpha().ToRadians(),
                                  b.beta().ToRadians())),
          g);
      EXPECT_NEAR(closed.p1, ref[0], kTol);
      EXPECT_NEAR(closed.p2, ref[1], kTol);
    }
  }
}

TEST(PayoffTest, ClassicalCornersReproduceGame) {
  const BimatrixGame pd = PrisonersDilemma();
  const UnitaryParams moves[] = {UnitaryParams::Identity(),
                                 UnitaryParams::FlipX()};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const auto p = ClosedFormPayoff(moves[i], moves[j], pd);
      EXPECT_NEAR(p.p1, pd.RowPayoff(i, j).ToDouble(), kTol);
      EXPECT_NEAR(p.p2, pd.ColPayoff(i, j).ToDouble(), kTol);
    }
  }
}

TEST(PayoffTest, RejectsUnnormalizedState) {
  StateVector4 s;
  s.amplitudes[0] = 2.0;
  EXPECT_THROW(PayoffFromState(s, MeasurementPair::FromGame(PrisonersDilemma())),
               DomainError);
}

TEST(PayoffTest, RequiresTwoByTwo) {
  const BimatrixGame g = MakeGame({"a"}, {"x"}, {{{1, 1}}});
  EXPECT_THROW(ClosedFormPayoff(UnitaryParams::Q(), UnitaryParams::Q(), g),
               std::invalid_argument);
}

TEST(OracleTest, DeviationWithinTolerance) {
  const OracleReport r = VerifyOracle(500, 42, 4);
  EXPECT_EQ(r.samples, 500);
  EXPECT_EQ(r.games, 4);
  EXPECT_LE(r.max_abs_deviation, kTol);
  EXPECT_LE(r.max_norm_deviation, kTol);
}

TEST(OracleTest, ParallelMatchesSerial) {
  const OracleReport a = VerifyOracle(300, 7, 3);
  const OracleReport b = VerifyOracleSerial(300, 7, 3);
  EXPECT_EQ(a.max_abs_deviation, b.max_abs_deviation);
  EXPECT_EQ(a.max_norm_deviation, b.max_norm_deviation);
}

}  // namespace
}  // namespace ewlext
