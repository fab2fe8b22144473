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

// Reference computations for the tests. Nothing here calls into the library's
// numeric code: the statevector is built from explicit 4x4 matrices, and
// equilibrium checks are plain best-response comparisons.

#ifndef EWLEXT_TESTS_ORACLES_H_
#define EWLEXT_TESTS_ORACLES_H_

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "ewlext/game.h"
#include "ewlext/rational.h"

namespace ewlext::oracle {

using C = std::complex<double>;
using Mat2 = std::array<std::array<C, 2>, 2>;
using Mat4 = std::array<std::array<C, 4>, 4>;
using Vec4 = std::array<C, 4>;

inline Mat2 U(double theta, double alpha, double beta) {
  const C i(0, 1);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {{{std::exp(i * alpha) * c, i * std::exp(i * beta) * s},
           {i * std::exp(-i * beta) * s, std::exp(-i * alpha) * c}}};
}

inline Mat4 Kron(const Mat2& a, const Mat2& b) {
  Mat4 out{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out[r][c] = a[r / 2][c / 2] * b[r % 2][c % 2];
  }
  return out;
}

inline Mat4 Mul(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 4; ++k) out[r][c] += a[r][k] * b[k][c];
  return out;
}

inline Mat4 Dagger(const Mat4& a) {
  Mat4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r][c] = std::conj(a[c][r]);
  return out;
}

// J = (I(x)I + i X(x)X) / sqrt(2).
inline Mat4 Entangler() {
  const Mat2 id{{{1, 0}, {0, 1}}};
  const Mat2 x{{{0, 1}, {1, 0}}};
  const Mat4 a = Kron(id, id), b = Kron(x, x);
  Mat4 j{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      j[r][c] = (a[r][c] + C(0, 1) * b[r][c]) / std::sqrt(2.0);
  return j;
}

// J^dagger (U1 (x) U2) J |00>.
inline Vec4 State(const Mat2& u1, const Mat2& u2) {
  const Mat4 j = Entangler();
  const Mat4 m = Mul(Dagger(j), Mul(Kron(u1, u2), j));
  return {m[0][0], m[1][0], m[2][0], m[3][0]};
}

// Expected payoffs of the measured state, basis order 00, 01, 10, 11.
inline std::array<double, 2> StatePayoff(const Vec4& psi,
                                         const BimatrixGame& game) {
  std::array<double, 2> out{0, 0};
  for (int k = 0; k < 4; ++k) {
    const double p = std::norm(psi[k]);
    out[0] += p * game.RowPayoff(k / 2, k % 2).ToDouble();
    out[1] += p * game.ColPayoff(k / 2, k % 2).ToDouble();
  }
  return out;
}

// Nash check by comparing each pure deviation against the profile payoff.
inline bool IsNash(const BimatrixGame& g, const std::vector<Rational>& x,
                   const std::vector<Rational>& y) {
  Rational v1 = 0, v2 = 0;
  for (std::size_t i = 0; i < g.NumRows(); ++i)
    for (std::size_t j = 0; j < g.NumCols(); ++j) {
      v1 += x[i] * y[j] * g.RowPayoff(i, j);
      v2 += x[i] * y[j] * g.ColPayoff(i, j);
    }
  for (std::size_t i = 0; i < g.NumRows(); ++i) {
    Rational d = 0;
    for (std::size_t j = 0; j < g.NumCols(); ++j) d += y[j] * g.RowPayoff(i, j);
    if (d > v1) return false;
  }
  for (std::size_t j = 0; j < g.NumCols(); ++j) {
    Rational d = 0;
    for (std::size_t i = 0; i < g.NumRows(); ++i) d += x[i] * g.ColPayoff(i, j);
    if (d > v2) return false;
  }
  return true;
}

// Fully mixed equilibrium of a 2x2 game from the two indifference equations,
// if both denominators are nonzero and the probabilities are interior.
inline std::optional<std::pair<Rational, Rational>> InteriorMixed2x2(
    const BimatrixGame& g) {
  // q = P(col 0) makes the row player indifferent.
  const Rational dq = g.RowPayoff(0, 0) - g.RowPayoff(0, 1) -
                      g.RowPayoff(1, 0) + g.RowPayoff(1, 1);
  // p = P(row 0) makes the column player indifferent.
  const Rational dp = g.ColPayoff(0, 0) - g.ColPayoff(0, 1) -
                      g.ColPayoff(1, 0) + g.ColPayoff(1, 1);
  if (dq.IsZero() || dp.IsZero()) return std::nullopt;
  const Rational q = (g.RowPayoff(1, 1) - g.RowPayoff(0, 1)) / dq;
  const Rational p = (g.ColPayoff(1, 1) - g.ColPayoff(1, 0)) / dp;
  if (p <= Rational(0) || p >= Rational(1) || q <= Rational(0) ||
      q >= Rational(1)) {
    return std::nullopt;
  }
  return std::make_pair(p, q);
}

}  // namespace ewlext::oracle

#endif  // EWLEXT_TESTS_ORACLES_H_
