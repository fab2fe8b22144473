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

#include "ewlext/nash.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <tuple>

#include "ewlext/linear_system.h"

namespace ewlext {
namespace {

// Support enumeration over bitmasks; anything beyond this is far outside the
// intended 3x3 scale anyway.
constexpr std::size_t kMaxStrategies = 16;

std::vector<std::size_t> Indices(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

template <typename T>
std::vector<std::size_t> SupportOf(const std::vector<T>& probs) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!ScalarTraits<T>::IsZero(probs[i])) out.push_back(i);
  }
  return out;
}

template <typename T>
bool ApproxEqual(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!ScalarTraits<T>::Equal(a[i], b[i])) return false;
  }
  return true;
}

// Vertices of one player's polytope for a support pair. `opp_payoff(own,
// opp)` is the opponent's payoff when this player plays `own` and the
// opponent plays `opp`. Returned vectors have one entry per own strategy.
template <typename T, typename PayoffFn>
std::vector<std::vector<T>> SideVertices(PayoffFn opp_payoff,
                                         std::size_t num_own,
                                         std::size_t num_opp,
                                         std::uint32_t own_mask,
                                         std::uint32_t opp_mask) {
  using Traits = ScalarTraits<T>;
  const std::vector<std::size_t> own = Indices(own_mask);
  const std::vector<std::size_t> opp = Indices(opp_mask);
  std::vector<std::size_t> off_support;
  for (std::size_t j = 0; j < num_opp; ++j) {
    if (!(opp_mask >> j & 1u)) off_support.push_back(j);
  }
  const std::size_t k = own.size();
  const std::size_t num_vars = k + 1;  // probabilities, then the value

  auto opp_row = [&](std::size_t j) {
    std::vector<T> coeffs(num_vars);
    for (std::size_t t = 0; t < k; ++t) coeffs[t] = opp_payoff(own[t], j);
    coeffs[k] = T(-1);
    return coeffs;
  };

  LinearSystem<T> base(num_vars);
  base.AddEquation(std::vector<T>(k, T(1)), T(1));
  for (std::size_t j : opp) base.AddEquation(opp_row(j), T(0));

  auto feasible = [&](const std::vector<T>& v) {
    for (std::size_t t = 0; t < k; ++t) {
      if (Traits::IsNegative(v[t])) return false;
    }
    for (std::size_t j : off_support) {
      T slack = v[k];
      for (std::size_t t = 0; t < k; ++t) slack -= opp_payoff(own[t], j) * v[t];
      if (Traits::IsNegative(slack)) return false;
    }
    return true;
  };

  std::vector<std::vector<T>> vertices;
  auto record = [&](const std::vector<T>& v) {
    std::vector<T> probs(num_own, T(0));
    for (std::size_t t = 0; t < k; ++t) {
      probs[own[t]] = Traits::IsZero(v[t]) ? T(0) : v[t];
    }
    for (const auto& existing : vertices) {
      if (ApproxEqual(existing, probs)) return;
    }
    vertices.push_back(std::move(probs));
  };

  const LinearSolution<T> base_solution = Solve(base);
  if (base_solution.kind == SolutionKind::kInconsistent) return vertices;
  if (base_solution.kind == SolutionKind::kUnique) {
    if (feasible(base_solution.values)) record(base_solution.values);
    return vertices;
  }

  // Underdetermined: tighten subsets of {x_t >= 0} and {off-support payoff
  // <= value} until the point is pinned down.
  const std::size_t num_ineq = k + off_support.size();
  for (std::uint32_t tight = 1; tight < (1u << num_ineq); ++tight) {
    LinearSystem<T> system = base;
    for (std::size_t q = 0; q < num_ineq; ++q) {
      if (!(tight >> q & 1u)) continue;
      if (q < k) {
        std::vector<T> coeffs(num_vars);
        coeffs[q] = T(1);
        system.AddEquation(std::move(coeffs), T(0));
      } else {
        system.AddEquation(opp_row(off_support[q - k]), T(0));
      }
    }
    const LinearSolution<T> solution = Solve(std::move(system));
    if (solution.kind == SolutionKind::kUnique && feasible(solution.values)) {
      record(solution.values);
    }
  }
  return vertices;
}

template <typename T>
struct PairOutcome {
  std::vector<MixedProfile<T>> profiles;
  bool degenerate = false;
};

template <typename T>
PairOutcome<T> SolveSupportPair(const Game<T>& game, std::uint32_t row_mask,
                                std::uint32_t col_mask) {
  const std::size_t m = game.NumRows();
  const std::size_t n = game.NumCols();
  auto xs = SideVertices<T>(
      [&](std::size_t i, std::size_t j) -> const T& {
        return game.ColPayoff(i, j);
      },
      m, n, row_mask, col_mask);
  PairOutcome<T> outcome;
  if (xs.empty()) return outcome;
  auto ys = SideVertices<T>(
      [&](std::size_t j, std::size_t i) -> const T& {
        return game.RowPayoff(i, j);
      },
      n, m, col_mask, row_mask);
  if (ys.empty()) return outcome;
  outcome.degenerate = xs.size() > 1 || ys.size() > 1;
  for (const auto& x : xs) {
    for (const auto& y : ys) outcome.profiles.push_back({x, y});
  }
  return outcome;
}

template <typename T>
void CheckEnumerable(const Game<T>& game) {
  if (game.NumRows() > kMaxStrategies || game.NumCols() > kMaxStrategies) {
    throw GameError("support enumeration is limited to " +
                    std::to_string(kMaxStrategies) + " strategies per player");
  }
}

template <typename T>
bool ProfileLess(const MixedProfile<T>& a, const MixedProfile<T>& b) {
  const auto sa1 = SupportOf(a.p1), sa2 = SupportOf(a.p2);
  const auto sb1 = SupportOf(b.p1), sb2 = SupportOf(b.p2);
  return std::forward_as_tuple(sa1.size(), sa2.size(), sa1, sa2, a.p1, a.p2) <
         std::forward_as_tuple(sb1.size(), sb2.size(), sb1, sb2, b.p1, b.p2);
}

template <typename T>
EquilibriumReport<T> MergeOutcomes(const Game<T>& game,
                                   std::vector<PairOutcome<T>> outcomes) {
  EquilibriumReport<T> report;
  std::vector<MixedProfile<T>> unique;
  for (auto& outcome : outcomes) {
    report.degenerate = report.degenerate || outcome.degenerate;
    for (auto& profile : outcome.profiles) {
      const bool seen = std::any_of(
          unique.begin(), unique.end(), [&](const MixedProfile<T>& u) {
            return ApproxEqual(u.p1, profile.p1) && ApproxEqual(u.p2, profile.p2);
          });
      if (!seen) unique.push_back(std::move(profile));
    }
  }
  std::sort(unique.begin(), unique.end(), ProfileLess<T>);
  for (auto& profile : unique) {
    const auto s1 = SupportOf(profile.p1);
    const auto s2 = SupportOf(profile.p2);
    if (s1.size() == 1 && s2.size() == 1) {
      report.pure.push_back({s1[0], s2[0], game.At(s1[0], s2[0])});
    } else {
      Payoff<T> payoff = MixedPayoff(game, profile);
      report.mixed.push_back({std::move(profile), std::move(payoff)});
    }
  }
  std::sort(report.pure.begin(), report.pure.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.row, a.col) < std::tie(b.row, b.col);
            });
  return report;
}

struct SupportPairs {
  std::uint32_t num_row_masks;
  std::uint32_t num_col_masks;

  int size() const { return static_cast<int>(num_row_masks * num_col_masks); }
  std::uint32_t RowMask(int index) const { return index / num_col_masks + 1; }
  std::uint32_t ColMask(int index) const { return index % num_col_masks + 1; }
};

template <typename T>
SupportPairs PairsOf(const Game<T>& game) {
  return {(1u << game.NumRows()) - 1, (1u << game.NumCols()) - 1};
}

}  // namespace

template <typename T>
MixedProfile<T> PureProfile(const Game<T>& game, std::size_t row,
                            std::size_t col) {
  MixedProfile<T> profile{std::vector<T>(game.NumRows(), T(0)),
                          std::vector<T>(game.NumCols(), T(0))};
  profile.p1.at(row) = T(1);
  profile.p2.at(col) = T(1);
  return profile;
}

template <typename T>
void ValidateProfile(const Game<T>& game, const MixedProfile<T>& profile) {
  using Traits = ScalarTraits<T>;
  if (profile.p1.size() != game.NumRows() ||
      profile.p2.size() != game.NumCols()) {
    throw GameError("profile dimensions " + std::to_string(profile.p1.size()) +
                    "x" + std::to_string(profile.p2.size()) +
                    " do not match game " + std::to_string(game.NumRows()) +
                    "x" + std::to_string(game.NumCols()));
  }
  for (const auto* probs : {&profile.p1, &profile.p2}) {
    T total(0);
    for (const T& p : *probs) {
      if (Traits::IsNegative(p)) throw GameError("negative probability");
      total += p;
    }
    if (!Traits::Equal(total, T(1))) {
      throw GameError("probabilities sum to " + Traits::Format(total));
    }
  }
}

template <typename T>
std::vector<PureEquilibrium<T>> PureEquilibria(const Game<T>& game) {
  using Traits = ScalarTraits<T>;
  std::vector<PureEquilibrium<T>> out;
  for (std::size_t i = 0; i < game.NumRows(); ++i) {
    for (std::size_t j = 0; j < game.NumCols(); ++j) {
      bool best = true;
      for (std::size_t k = 0; best && k < game.NumRows(); ++k) {
        best = !Traits::Less(game.RowPayoff(i, j), game.RowPayoff(k, j));
      }
      for (std::size_t l = 0; best && l < game.NumCols(); ++l) {
        best = !Traits::Less(game.ColPayoff(i, j), game.ColPayoff(i, l));
      }
      if (best) out.push_back({i, j, game.At(i, j)});
    }
  }
  return out;
}

template <typename T>
Payoff<T> MixedPayoff(const Game<T>& game, const MixedProfile<T>& profile) {
  if (profile.p1.size() != game.NumRows() ||
      profile.p2.size() != game.NumCols()) {
    throw GameError("profile dimensions do not match game");
  }
  Payoff<T> total{T(0), T(0)};
  for (std::size_t i = 0; i < game.NumRows(); ++i) {
    if (ScalarTraits<T>::IsZero(profile.p1[i])) continue;
    for (std::size_t j = 0; j < game.NumCols(); ++j) {
      const T weight = profile.p1[i] * profile.p2[j];
      total.p1 += weight * game.RowPayoff(i, j);
      total.p2 += weight * game.ColPayoff(i, j);
    }
  }
  return total;
}

template <typename T>
bool VerifyEquilibrium(const Game<T>& game, const MixedProfile<T>& profile) {
  using Traits = ScalarTraits<T>;
  const Payoff<T> value = MixedPayoff(game, profile);
  for (std::size_t k = 0; k < game.NumRows(); ++k) {
    T deviation(0);
    for (std::size_t j = 0; j < game.NumCols(); ++j) {
      deviation += profile.p2[j] * game.RowPayoff(k, j);
    }
    if (Traits::Less(value.p1, deviation)) return false;
  }
  for (std::size_t l = 0; l < game.NumCols(); ++l) {
    T deviation(0);
    for (std::size_t i = 0; i < game.NumRows(); ++i) {
      deviation += profile.p1[i] * game.ColPayoff(i, l);
    }
    if (Traits::Less(value.p2, deviation)) return false;
  }
  return true;
}

template <typename T>
EquilibriumReport<T> SupportEnumeration(const Game<T>& game) {
  CheckEnumerable(game);
  const SupportPairs pairs = PairsOf(game);
  std::vector<PairOutcome<T>> outcomes(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (int p = 0; p < pairs.size(); ++p) {
    outcomes[p] = SolveSupportPair(game, pairs.RowMask(p), pairs.ColMask(p));
  }
  return MergeOutcomes(game, std::move(outcomes));
}

template <typename T>
EquilibriumReport<T> SupportEnumerationSerial(const Game<T>& game) {
  CheckEnumerable(game);
  const SupportPairs pairs = PairsOf(game);
  std::vector<PairOutcome<T>> outcomes;
  outcomes.reserve(pairs.size());
  for (int p = 0; p < pairs.size(); ++p) {
    outcomes.push_back(
        SolveSupportPair(game, pairs.RowMask(p), pairs.ColMask(p)));
  }
  return MergeOutcomes(game, std::move(outcomes));
}

template MixedProfile<Rational> PureProfile(const BimatrixGame&, std::size_t,
                                            std::size_t);
template MixedProfile<double> PureProfile(const RealGame&, std::size_t,
                                          std::size_t);
template void ValidateProfile(const BimatrixGame&,
                              const MixedProfile<Rational>&);
template void ValidateProfile(const RealGame&, const MixedProfile<double>&);
template std::vector<PureEquilibrium<Rational>> PureEquilibria(
    const BimatrixGame&);
template std::vector<PureEquilibrium<double>> PureEquilibria(const RealGame&);
template Payoff<Rational> MixedPayoff(const BimatrixGame&,
                                      const MixedProfile<Rational>&);
template Payoff<double> MixedPayoff(const RealGame&,
                                    const MixedProfile<double>&);
template bool VerifyEquilibrium(const BimatrixGame&,
                                const MixedProfile<Rational>&);
template bool VerifyEquilibrium(const RealGame&, const MixedProfile<double>&);
template EquilibriumReport<Rational> SupportEnumeration(const BimatrixGame&);
template EquilibriumReport<double> SupportEnumeration(const RealGame&);
template EquilibriumReport<Rational> SupportEnumerationSerial(
    const BimatrixGame&);
template EquilibriumReport<double> SupportEnumerationSerial(const RealGame&);

}  // namespace ewlext
