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

#include <cstdio>

namespace ewlext {

std::string FormatDouble(double x) {
  if (x == 0.0) return "0";  // also folds -0
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

std::string_view VariantName(VariantKind kind) {
  switch (kind) {
    case VariantKind::kRowSwap:
      return "RowSwap";
    case VariantKind::kColSwap:
      return "ColSwap";
    case VariantKind::kRowColSwap:
      return "RowColSwap";
  }
  return "?";
}

BimatrixGame PrisonersDilemma() {
  return PrisonersDilemma(Rational(3), Rational(0), Rational(5), Rational(1));
}

BimatrixGame PrisonersDilemma(const Rational& reward, const Rational& sucker,
                              const Rational& temptation,
                              const Rational& punishment) {
  return MakeGame({"C", "D"}, {"C", "D"},
                  {{{reward, reward}, {sucker, temptation}},
                   {{temptation, sucker}, {punishment, punishment}}});
}

}  // namespace ewlext
