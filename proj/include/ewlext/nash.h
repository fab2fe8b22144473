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

// Nash equilibria of bimatrix games.
//
// Pure equilibria are read off the grid directly. Mixed equilibria come from
// support enumeration: for every pair of nonempty supports (I, J) the
// conditions on player 1's strategy x involve only player 2's payoffs and
// vice versa, so the equilibria with supports inside (I, J) form a product
// of two polytopes
//
//   Px = { x >= 0 on I, sum x = 1, B^T x equal to w on J, <= w off J }
//   Py = { y >= 0 on J, sum y = 1, A y   equal to v on I, <= v off I }
//
// Every point of Px x Py is an equilibrium. Vertices are enumerated by
// tightening subsets of the inequalities and solving the resulting exact
// linear systems. In a nondegenerate game each polytope is a single point;
// when one of them has two or more vertices the game carries a continuum of
// equilibria, the report's `degenerate` flag is raised and the vertices are
// listed.

#ifndef EWLEXT_NASH_H_
#define EWLEXT_NASH_H_

#include <cstddef>
#include <vector>

#include "ewlext/game.h"

namespace ewlext {

template <typename T>
struct MixedProfile {
  std::vector<T> p1;
  std::vector<T> p2;

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
};

template <typename T>
struct PureEquilibrium {
  std::size_t row = 0;
  std::size_t col = 0;
  Payoff<T> payoff;
};

template <typename T>
struct MixedEquilibrium {
  MixedProfile<T> profile;
  Payoff<T> payoff;
};

template <typename T>
struct EquilibriumReport {
  std::vector<PureEquilibrium<T>> pure;
  std::vector<MixedEquilibrium<T>> mixed;
  bool degenerate = false;

  std::size_t size() const { return pure.size() + mixed.size(); }
};

// Degenerate mixture putting all weight on (row, col).
template <typename T>
MixedProfile<T> PureProfile(const Game<T>& game, std::size_t row,
                            std::size_t col);

// Throws GameError unless the profile matches the game's shape and each
// vector is a probability distribution (within kFloatTolerance for doubles).
template <typename T>
void ValidateProfile(const Game<T>& game, const MixedProfile<T>& profile);

// Cells where the row payoff is a column maximum and the column payoff is a
// row maximum (weak inequalities).
template <typename T>
std::vector<PureEquilibrium<T>> PureEquilibria(const Game<T>& game);

template <typename T>
Payoff<T> MixedPayoff(const Game<T>& game, const MixedProfile<T>& profile);

// True iff no pure deviation by either player is strictly profitable.
template <typename T>
bool VerifyEquilibrium(const Game<T>& game, const MixedProfile<T>& profile);

// OpenMP-parallel over support pairs; results merged in a fixed order.
template <typename T>
EquilibriumReport<T> SupportEnumeration(const Game<T>& game);

// Single-threaded reference for SupportEnumeration. Identical output.
template <typename T>
EquilibriumReport<T> SupportEnumerationSerial(const Game<T>& game);

extern template MixedProfile<Rational> PureProfile(const BimatrixGame&,
                                                   std::size_t, std::size_t);
extern template MixedProfile<double> PureProfile(const RealGame&, std::size_t,
                                                 std::size_t);
extern template void ValidateProfile(const BimatrixGame&,
                                     const MixedProfile<Rational>&);
extern template void ValidateProfile(const RealGame&,
                                     const MixedProfile<double>&);
extern template std::vector<PureEquilibrium<Rational>> PureEquilibria(
    const BimatrixGame&);
extern template std::vector<PureEquilibrium<double>> PureEquilibria(
    const RealGame&);
extern template Payoff<Rational> MixedPayoff(const BimatrixGame&,
                                             const MixedProfile<Rational>&);
extern template Payoff<double> MixedPayoff(const RealGame&,
                                           const MixedProfile<double>&);
extern template bool VerifyEquilibrium(const BimatrixGame&,
                                       const MixedProfile<Rational>&);
extern template bool VerifyEquilibrium(const RealGame&,
                                       const MixedProfile<double>&);
extern template EquilibriumReport<Rational> SupportEnumeration(
    const BimatrixGame&);
extern template EquilibriumReport<double> SupportEnumeration(const RealGame&);
extern template EquilibriumReport<Rational> SupportEnumerationSerial(
    const BimatrixGame&);
extern template EquilibriumReport<double> SupportEnumerationSerial(
    const RealGame&);

}  // namespace ewlext

#endif  // EWLEXT_NASH_H_
