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

// Two-qubit EWL quantization with the maximally entangling gate
// J = (I (x) I + i X (x) X) / sqrt(2).
//
// Two independent routes to a payoff are provided: a statevector simulation
// (J, then U1 (x) U2, then J^dagger, then a diagonal measurement) and the
// four-term trigonometric closed form. They must agree to 1e-12.

#ifndef EWLEXT_EWL_H_
#define EWLEXT_EWL_H_

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>

#include "ewlext/angle.h"
#include "ewlext/game.h"

namespace ewlext {

using Complex = std::complex<double>;

inline constexpr double kUnitarityTolerance = 1e-12;
inline constexpr double kNormTolerance = 1e-9;

// Row-major 2x2 complex matrix.
struct ComplexMatrix2 {
  std::array<Complex, 4> entries{};

  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries[2 * r + c];
  }
  Complex& operator()(std::size_t r, std::size_t c) {
    return entries[2 * r + c];
  }
};

ComplexMatrix2 Multiply(const ComplexMatrix2& a, const ComplexMatrix2& b);
ComplexMatrix2 Adjoint(const ComplexMatrix2& m);

// Amplitudes over |00>, |01>, |10>, |11> (first qubit is player 1's).
struct StateVector4 {
  std::array<Complex, 4> amplitudes{};

  double NormSquared() const;
  // Squared amplitudes, i.e. outcome probabilities.
  std::array<double, 4> Probabilities() const;
};

// |<a|b>| == 1 within `tolerance`, i.e. equal up to a global phase.
bool SameUpToPhase(const StateVector4& a, const StateVector4& b,
                   double tolerance = kUnitarityTolerance);

// Diagonal observables M1 = sum a_ij |ij><ij| and M2 = sum b_ij |ij><ij|,
// weights indexed 2*i + j.
struct MeasurementPair {
  std::array<double, 4> m1{};
  std::array<double, 4> m2{};

  static MeasurementPair FromGame(const RealGame& game);
  static MeasurementPair FromGame(const BimatrixGame& game);
};

// [[e^{ia}cos(t/2), i e^{ib}sin(t/2)], [i e^{-ib}sin(t/2), e^{-ia}cos(t/2)]]
ComplexMatrix2 UnitaryMatrix(const UnitaryParams& params);

// J^dagger (U1 (x) U2) J |00>.
StateVector4 FinalState(const UnitaryParams& player1,
                        const UnitaryParams& player2);

// (<psi|M1|psi>, <psi|M2|psi>). Throws DomainError if the state's norm is
// off by more than kNormTolerance.
Payoff<double> PayoffFromState(const StateVector4& state,
                               const MeasurementPair& measurement);

// Closed-form payoff pair for a 2x2 game; throws GameError otherwise.
Payoff<double> ClosedFormPayoff(const UnitaryParams& player1,
                                const UnitaryParams& player2,
                                const RealGame& game);
Payoff<double> ClosedFormPayoff(const UnitaryParams& player1,
                                const UnitaryParams& player2,
                                const BimatrixGame& game);

// Largest |closed form - statevector| payoff difference over random strategy
// pairs and random rational games.
struct OracleReport {
  std::size_t samples = 0;
  std::size_t games = 0;
  std::uint64_t seed = 0;
  double max_abs_deviation = 0.0;
  // Largest | ||psi||^2 - 1 | seen along the way.
  double max_norm_deviation = 0.0;
};

// Samples are drawn up front from `seed`; the evaluation loop is
// OpenMP-parallel.
OracleReport VerifyOracle(std::size_t samples, std::uint64_t seed,
                          std::size_t games);
// Single-threaded reference; returns the same report.
OracleReport VerifyOracleSerial(std::size_t samples, std::uint64_t seed,
                                std::size_t games);

}  // namespace ewlext

#endif  // EWLEXT_EWL_H_
