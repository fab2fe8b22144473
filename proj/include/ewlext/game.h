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

#ifndef EWLEXT_GAME_H_
#define EWLEXT_GAME_H_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ewlext/rational.h"
#include "ewlext/scalar.h"

namespace ewlext {

// Raised for structurally invalid games, profiles and shape mismatches.
class GameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename T>
struct Payoff {
  T p1{};
  T p2{};

  friend bool operator==(const Payoff&, const Payoff&) = default;
};

// Two-player strategic-form game: rows belong to player 1, columns to
// player 2, and every cell holds the ordered payoff pair.
template <typename T>
class Game {
 public:
  using Scalar = T;
  using Grid = std::vector<std::vector<Payoff<T>>>;

  Game(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
       Grid payoffs)
      : row_labels_(std::move(row_labels)),
        col_labels_(std::move(col_labels)),
        payoffs_(std::move(payoffs)) {
    if (row_labels_.empty() || col_labels_.empty()) {
      throw GameError("a game needs at least one strategy per player");
    }
    if (payoffs_.size() != row_labels_.size()) {
      throw GameError("payoff grid has " + std::to_string(payoffs_.size()) +
                      " rows but " + std::to_string(row_labels_.size()) +
                      " row labels");
    }
    for (const auto& row : payoffs_) {
      if (row.size() != col_labels_.size()) {
        throw GameError("payoff grid row has " + std::to_string(row.size()) +
                        " cells but " + std::to_string(col_labels_.size()) +
                        " column labels");
      }
    }
    RequireDistinct(row_labels_, "row");
    RequireDistinct(col_labels_, "column");
  }

  std::size_t NumRows() const { return row_labels_.size(); }
  std::size_t NumCols() const { return col_labels_.size(); }
  const std::vector<std::string>& RowLabels() const { return row_labels_; }
  const std::vector<std::string>& ColLabels() const { return col_labels_; }
  const Grid& Payoffs() const { return payoffs_; }

  const Payoff<T>& At(std::size_t row, std::size_t col) const {
    return payoffs_[row][col];
  }
  const T& RowPayoff(std::size_t row, std::size_t col) const {
    return payoffs_[row][col].p1;
  }
  const T& ColPayoff(std::size_t row, std::size_t col) const {
    return payoffs_[row][col].p2;
  }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  static void RequireDistinct(const std::vector<std::string>& labels,
                              std::string_view side) {
    std::set<std::string> seen;
    for (const auto& label : labels) {
      if (!seen.insert(label).second) {
        throw GameError("duplicate " + std::string(side) + " label \"" +
                        label + "\"");
      }
    }
  }

  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  Grid payoffs_;
};

using PayoffPair = Payoff<Rational>;
using BimatrixGame = Game<Rational>;
using RealGame = Game<double>;

inline BimatrixGame MakeGame(std::vector<std::string> rows,
                             std::vector<std::string> cols,
                             BimatrixGame::Grid payoffs) {
  return BimatrixGame(std::move(rows), std::move(cols), std::move(payoffs));
}

inline RealGame ToReal(const BimatrixGame& game) {
  RealGame::Grid grid(game.NumRows());
  for (std::size_t i = 0; i < game.NumRows(); ++i) {
    for (std::size_t j = 0; j < game.NumCols(); ++j) {
      grid[i].push_back(
          {game.RowPayoff(i, j).ToDouble(), game.ColPayoff(i, j).ToDouble()});
    }
  }
  return RealGame(game.RowLabels(), game.ColLabels(), std::move(grid));
}

enum class VariantKind { kRowSwap, kColSwap, kRowColSwap };

inline constexpr VariantKind kAllVariantKinds[] = {
    VariantKind::kRowSwap, VariantKind::kColSwap, VariantKind::kRowColSwap};

std::string_view VariantName(VariantKind kind);

// Isomorphic presentation of a 2x2 game with its rows, columns, or both
// reversed. Labels travel with their strategies.
template <typename T>
Game<T> Variant(const Game<T>& game, VariantKind kind) {
  if (game.NumRows() != 2 || game.NumCols() != 2) {
    throw GameError("variants are defined for 2x2 games only");
  }
  const bool swap_rows = kind != VariantKind::kColSwap;
  const bool swap_cols = kind != VariantKind::kRowSwap;
  auto rows = game.RowLabels();
  auto cols = game.ColLabels();
  if (swap_rows) std::swap(rows[0], rows[1]);
  if (swap_cols) std::swap(cols[0], cols[1]);
  typename Game<T>::Grid grid(2, std::vector<Payoff<T>>(2));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      grid[i][j] = game.At(swap_rows ? 1 - i : i, swap_cols ? 1 - j : j);
    }
  }
  return Game<T>(std::move(rows), std::move(cols), std::move(grid));
}

// Pair of strategy bijections from game A to game B: row i of A maps to row
// row_map[i] of B, column j to column col_map[j].
struct StrategyBijection {
  std::vector<std::size_t> row_map;
  std::vector<std::size_t> col_map;

  friend bool operator==(const StrategyBijection&,
                         const StrategyBijection&) = default;
};

template <typename T>
bool IsStrongIsomorphism(const Game<T>& a, const Game<T>& b,
                         const StrategyBijection& phi) {
  using Traits = ScalarTraits<T>;
  for (std::size_t i = 0; i < a.NumRows(); ++i) {
    for (std::size_t j = 0; j < a.NumCols(); ++j) {
      const auto& lhs = a.At(i, j);
      const auto& rhs = b.At(phi.row_map[i], phi.col_map[j]);
      if (!Traits::Equal(lhs.p1, rhs.p1) || !Traits::Equal(lhs.p2, rhs.p2)) {
        return false;
      }
    }
  }
  return true;
}

// Exhaustive search over all n!*m! bijection pairs, row permutations in
// lexicographic order outermost. Returns the first pair that preserves both
// players' payoffs in every cell.
template <typename T>
std::optional<StrategyBijection> FindIsomorphism(const Game<T>& a,
                                                 const Game<T>& b) {
  if (a.NumRows() != b.NumRows() || a.NumCols() != b.NumCols()) {
    return std::nullopt;
  }
  StrategyBijection phi;
  phi.row_map.resize(a.NumRows());
  phi.col_map.resize(a.NumCols());
  std::iota(phi.row_map.begin(), phi.row_map.end(), std::size_t{0});
  do {
    std::iota(phi.col_map.begin(), phi.col_map.end(), std::size_t{0});
    do {
      if (IsStrongIsomorphism(a, b, phi)) return phi;
    } while (std::next_permutation(phi.col_map.begin(), phi.col_map.end()));
  } while (std::next_permutation(phi.row_map.begin(), phi.row_map.end()));
  return std::nullopt;
}

// True iff each player's payoffs are pairwise distinct across all cells.
template <typename T>
bool IsGeneric(const Game<T>& game) {
  using Traits = ScalarTraits<T>;
  auto distinct = [&](auto payoff_of) {
    std::vector<T> values;
    for (std::size_t i = 0; i < game.NumRows(); ++i) {
      for (std::size_t j = 0; j < game.NumCols(); ++j) {
        values.push_back(payoff_of(i, j));
      }
    }
    for (std::size_t x = 0; x < values.size(); ++x) {
      for (std::size_t y = x + 1; y < values.size(); ++y) {
        if (Traits::Equal(values[x], values[y])) return false;
      }
    }
    return true;
  };
  return distinct([&](auto i, auto j) { return game.RowPayoff(i, j); }) &&
         distinct([&](auto i, auto j) { return game.ColPayoff(i, j); });
}

// The 2x2 Prisoner's Dilemma with R=3, S=0, T=5, P=1 and strategies C, D.
BimatrixGame PrisonersDilemma();

// Prisoner's Dilemma family: (C,C)=(R,R), (C,D)=(S,T), (D,C)=(T,S),
// (D,D)=(P,P).
BimatrixGame PrisonersDilemma(const Rational& reward, const Rational& sucker,
                              const Rational& temptation,
                              const Rational& punishment);

}  // namespace ewlext

#endif  // EWLEXT_GAME_H_
