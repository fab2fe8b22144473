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

// 3x3 extensions of 2x2 games: both players get the classical strategies
// I = U(0,0,0) and iX = U(pi,0,0) plus one shared unitary U(theta, alpha,
// beta), and every cell is the EWL payoff of the corresponding pair.
//
// An extension is invariant when isomorphic presentations of the input game
// (rows swapped, columns swapped, or both) always yield isomorphic
// extensions. For generic games this happens exactly when theta = pi/2,
// alpha - beta = k*pi/2 and alpha + beta = l*pi/2 with k, l not both odd:
// 24 operators on [0, 2*pi)^2, falling into three families.

#ifndef EWLEXT_EXTENSION_H_
#define EWLEXT_EXTENSION_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ewlext/angle.h"
#include "ewlext/game.h"

namespace ewlext {

// Type I: (alpha, beta) in {0, pi}^2, the U row/column is the even mixture
// of the classical ones. Type II: {pi/2, 3pi/2}^2, crossed averages.
// Type III: odd multiples of pi/4, every new cell is the four-cell average.
enum class ExtensionType { kTypeI, kTypeII, kTypeIII };

inline constexpr ExtensionType kAllExtensionTypes[] = {
    ExtensionType::kTypeI, ExtensionType::kTypeII, ExtensionType::kTypeIII};

struct ExtensionClass {
  enum class Tag { kTypeI, kTypeII, kTypeIII, kNonInvariant };

  Tag tag = Tag::kNonInvariant;
  // (k, l) with alpha - beta = k*pi/2 and alpha + beta = l*pi/2, computed on
  // the reduced angles in [0, 2*pi). Present for invariant classes only.
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;

  bool IsInvariant() const { return tag != Tag::kNonInvariant; }
  std::optional<ExtensionType> Type() const;

  friend bool operator==(const ExtensionClass&, const ExtensionClass&) = default;
};

std::string_view ClassName(ExtensionClass::Tag tag);
std::string_view TypeName(ExtensionType type);

// Tolerance for classifying float angles.
inline constexpr double kClassifyTolerance = 1e-9;

// Exact arithmetic on the pi-multiples for exact params; float params snap
// within kClassifyTolerance.
ExtensionClass Classify(const UnitaryParams& params);

// A canonical operator of each family: U(pi/2, 0, 0), U(pi/2, pi/2, pi/2),
// U(pi/2, pi/4, pi/4).
UnitaryParams RepresentativeParams(ExtensionType type);

struct ExtendedGame {
  BimatrixGame source;
  UnitaryParams params;
  // Present when every cell is known exactly.
  std::optional<BimatrixGame> exact_game;
  // Always present; the double image of exact_game when that exists.
  RealGame real_game;

  bool exact() const { return exact_game.has_value(); }
};

// Fills the five non-classical cells from the EWL payoff formulas. Exact
// params on an invariant operator go through BuildTypeMatrix; other exact
// params whose trigonometric values are all rational (e.g. Q = U(0, pi/2, 0))
// are evaluated exactly; everything else in doubles. Strategy labels are
// I, iX and `unitary_label`. Throws GameError unless `game` is 2x2.
ExtendedGame BuildExtension(const BimatrixGame& game,
                            const UnitaryParams& params,
                            const std::string& unitary_label = "U");

// Exact 3x3 game of the given family.
ExtendedGame BuildTypeMatrix(const BimatrixGame& game, ExtensionType type,
                             const std::string& unitary_label = "U");

struct InvarianceVerdict {
  bool invariant = false;
  // False when the input has repeated payoffs, in which case accidental
  // isomorphisms can make the verdict meaningless.
  bool generic_input = true;
  // Isomorphism from the extension of `game` to the extension of each
  // variant, in kAllVariantKinds order.
  std::array<std::optional<StrategyBijection>, 3> bijections;
};

// Builds the extensions of `game` and of its three isomorphic variants and
// searches for a strong isomorphism to each. Float extensions compare cells
// within kFloatTolerance.
InvarianceVerdict EmpiricalInvariance(const BimatrixGame& game,
                                      const UnitaryParams& params);

}  // namespace ewlext

#endif  // EWLEXT_EXTENSION_H_
