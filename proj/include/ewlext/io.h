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

// JSON and text rendering of games, extensions and equilibrium reports.
//
// Game files look like
//   {"rows": ["C","D"], "cols": ["C","D"],
//    "payoffs": [[["3","3"],["0","5"]],[["5","0"],["1","1"]]]}
// with every payoff a string holding an integer, "p/q" or a decimal, so that
// values survive a round trip exactly. Extended games add "params", "class"
// and "exact".

#ifndef EWLEXT_IO_H_
#define EWLEXT_IO_H_

#include <optional>
#include <string>

#include "ewlext/extension.h"
#include "ewlext/game.h"
#include "ewlext/nash.h"
#include "json.hpp"

namespace ewlext {

using Json = nlohmann::ordered_json;

// Raised for malformed JSON documents (wrong shape, bad payoff strings).
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json GameToJson(const BimatrixGame& game);
// Throws FormatError (shape, payoff syntax) or GameError (validation).
BimatrixGame GameFromJson(const Json& json);
BimatrixGame ParseGame(const std::string& text);

struct GameDocument {
  BimatrixGame game;
  // False for extensions that were evaluated in floating point; their
  // payoffs are display approximations.
  bool exact = true;
  // The unrounded doubles of a float extension, when the document has them.
  std::optional<RealGame> real_game;
};

GameDocument ParseGameDocument(const std::string& text);

// Float cells are written as the simplest fraction within 1e-12 when one
// with a small denominator exists, else as a shortest round-trip decimal.
// Float extensions also carry "float_payoffs", the unrounded values, which
// is what solving reads back.
Json ExtendedGameToJson(const ExtendedGame& ext);

Json ReportToJson(const EquilibriumReport<Rational>& report,
                  const BimatrixGame& game);
Json ReportToJson(const EquilibriumReport<double>& report,
                  const RealGame& game);

// Fixed-width table of the payoff grid.
template <typename T>
std::string FormatTable(const Game<T>& game);

std::string FormatReport(const EquilibriumReport<Rational>& report,
                         const BimatrixGame& game);
std::string FormatReport(const EquilibriumReport<double>& report,
                         const RealGame& game);

}  // namespace ewlext

#endif  // EWLEXT_IO_H_
