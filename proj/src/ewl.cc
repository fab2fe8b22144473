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

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ewlext/sampling.h"

namespace ewlext {
namespace {

using Matrix4 = std::array<Complex, 16>;

constexpr Complex kI{0.0, 1.0};

Matrix4 Kron(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  Matrix4 out{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out[(2 * i + k) * 4 + (2 * j + l)] = a(i, j) * b(k, l);
  return out;
}

std::array<Complex, 4> Apply(const Matrix4& m, const std::array<Complex, 4>& v) {
  std::array<Complex, 4> out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r] += m[r * 4 + c] * v[c];
  return out;
}

// J = (I (x) I + i X (x) X) / sqrt(2); X (x) X is the anti-diagonal.
Matrix4 Entangler(bool adjoint) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex off = (adjoint ? -kI : kI) * s;
  Matrix4 j{};
  for (std::size_t r = 0; r < 4; ++r) {
    j[r * 4 + r] = s;
    j[r * 4 + (3 - r)] = off;
  }
  return j;
}

void RequireTwoByTwo(const RealGame& game) {
  if (game.NumRows() != 2 || game.NumCols() != 2) {
    throw GameError("the EWL payoff is defined for 2x2 games only");
  }
}

struct Sample {
  UnitaryParams player1;
  UnitaryParams player2;
  std::size_t game;
};

struct OracleInputs {
  std::vector<RealGame> games;
  std::vector<MeasurementPair> measurements;
  std::vector<Sample> samples;
};

OracleInputs DrawOracleInputs(std::size_t samples, std::uint64_t seed,
                              std::size_t games) {
  Rng rng(seed);
  OracleInputs in;
  for (std::size_t g = 0; g < games; ++g) {
    in.games.push_back(ToReal(RandomGame(rng)));
    in.measurements.push_back(MeasurementPair::FromGame(in.games.back()));
  }
  for (std::size_t g = 0; g < games; ++g) {
    for (std::size_t s = 0; s < samples; ++s) {
      UnitaryParams u1 = RandomParams(rng);
      UnitaryParams u2 = RandomParams(rng);
      in.samples.push_back({std::move(u1), std::move(u2), g});
    }
  }
  return in;
}

std::pair<double, double> Deviation(const OracleInputs& in, const Sample& s) {
  const StateVector4 state = FinalState(s.player1, s.player2);
  const Payoff<double> simulated =
      PayoffFromState(state, in.measurements[s.game]);
  const Payoff<double> closed =
      ClosedFormPayoff(s.player1, s.player2, in.games[s.game]);
  return {std::max(std::abs(simulated.p1 - closed.p1),
                   std::abs(simulated.p2 - closed.p2)),
          std::abs(state.NormSquared() - 1.0)};
}

}  // namespace

ComplexMatrix2 Multiply(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  ComplexMatrix2 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return out;
}

ComplexMatrix2 Adjoint(const ComplexMatrix2& m) {
  ComplexMatrix2 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

double StateVector4::NormSquared() const {
  double total = 0.0;
  for (const Complex& a : amplitudes) total += std::norm(a);
  return total;
}

std::array<double, 4> StateVector4::Probabilities() const {
  std::array<double, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) out[k] = std::norm(amplitudes[k]);
  return out;
}

bool SameUpToPhase(const StateVector4& a, const StateVector4& b,
                   double tolerance) {
  Complex overlap{};
  for (std::size_t k = 0; k < 4; ++k) {
    overlap += std::conj(a.amplitudes[k]) * b.amplitudes[k];
  }
  return std::abs(std::abs(overlap) - 1.0) <= tolerance;
}

MeasurementPair MeasurementPair::FromGame(const RealGame& game) {
  RequireTwoByTwo(game);
  MeasurementPair m;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      m.m1[2 * i + j] = game.RowPayoff(i, j);
      m.m2[2 * i + j] = game.ColPayoff(i, j);
    }
  }
  return m;
}

MeasurementPair MeasurementPair::FromGame(const BimatrixGame& game) {
  return FromGame(ToReal(game));
}

ComplexMatrix2 UnitaryMatrix(const UnitaryParams& params) {
  const double theta = params.theta().ToRadians();
  const double alpha = params.alpha().ToRadians();
  const double beta = params.beta().ToRadians();
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  ComplexMatrix2 u;
  u(0, 0) = std::polar(c, alpha);
  u(0, 1) = kI * std::polar(s, beta);
  u(1, 0) = kI * std::polar(s, -beta);
  u(1, 1) = std::polar(c, -alpha);
  return u;
}

StateVector4 FinalState(const UnitaryParams& player1,
                        const UnitaryParams& player2) {
  std::array<Complex, 4> psi{Complex(1.0), Complex(), Complex(), Complex()};
  psi = Apply(Entangler(false), psi);
  psi = Apply(Kron(UnitaryMatrix(player1), UnitaryMatrix(player2)), psi);
  psi = Apply(Entangler(true), psi);
  return StateVector4{psi};
}

Payoff<double> PayoffFromState(const StateVector4& state,
                               const MeasurementPair& measurement) {
  const double norm = state.NormSquared();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw DomainError("state is not normalized: squared norm " +
                      std::to_string(norm));
  }
  const auto probs = state.Probabilities();
  Payoff<double> out{0.0, 0.0};
  for (std::size_t k = 0; k < 4; ++k) {
    out.p1 += probs[k] * measurement.m1[k];
    out.p2 += probs[k] * measurement.m2[k];
  }
  return out;
}

Payoff<double> ClosedFormPayoff(const UnitaryParams& player1,
                                const UnitaryParams& player2,
                                const RealGame& game) {
  RequireTwoByTwo(game);
  const double t1 = player1.theta().ToRadians();
  const double a1 = player1.alpha().ToRadians();
  const double b1 = player1.beta().ToRadians();
  const double t2 = player2.theta().ToRadians();
  const double a2 = player2.alpha().ToRadians();
  const double b2 = player2.beta().ToRadians();
  const double c1 = std::cos(t1 / 2), s1 = std::sin(t1 / 2);
  const double c2 = std::cos(t2 / 2), s2 = std::sin(t2 / 2);

  const double w00 = std::cos(a1 + a2) * c1 * c2 + std::sin(b1 + b2) * s1 * s2;
  const double w01 = std::cos(a1 - b2) * c1 * s2 + std::sin(a2 - b1) * s1 * c2;
  const double w10 = std::sin(a1 - b2) * c1 * s2 + std::cos(a2 - b1) * s1 * c2;
  const double w11 = std::sin(a1 + a2) * c1 * c2 - std::cos(b1 + b2) * s1 * s2;
  const std::array<double, 4> weight{w00 * w00, w01 * w01, w10 * w10,
                                     w11 * w11};

  Payoff<double> out{0.0, 0.0};
  for (std::size_t k = 0; k < 4; ++k) {
    out.p1 += weight[k] * game.RowPayoff(k / 2, k % 2);
    out.p2 += weight[k] * game.ColPayoff(k / 2, k % 2);
  }
  return out;
}

Payoff<double> ClosedFormPayoff(const UnitaryParams& player1,
                                const UnitaryParams& player2,
                                const BimatrixGame& game) {
  return ClosedFormPayoff(player1, player2, ToReal(game));
}

OracleReport VerifyOracle(std::size_t samples, std::uint64_t seed,
                          std::size_t games) {
  const OracleInputs in = DrawOracleInputs(samples, seed, games);
  const int n = static_cast<int>(in.samples.size());
  double max_dev = 0.0;
  double max_norm = 0.0;
#pragma omp parallel for reduction(max : max_dev, max_norm)
  for (int k = 0; k < n; ++k) {
    const auto [dev, norm] = Deviation(in, in.samples[k]);
    max_dev = std::max(max_dev, dev);
    max_norm = std::max(max_norm, norm);
  }
  return {samples, games, seed, max_dev, max_norm};
}

OracleReport VerifyOracleSerial(std::size_t samples, std::uint64_t seed,
                                std::size_t games) {
  const OracleInputs in = DrawOracleInputs(samples, seed, games);
  OracleReport report{samples, games, seed, 0.0, 0.0};
  for (const Sample& s : in.samples) {
    const auto [dev, norm] = Deviation(in, s);
    report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
    report.max_norm_deviation = std::max(report.max_norm_deviation, norm);
  }
  return report;
}

}  // namespace ewlext
