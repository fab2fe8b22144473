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

#include "ewlext/sampling.h"

#include <numbers>
#include <string>

namespace ewlext {
namespace {

std::vector<std::string> Labels(char first, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.emplace_back(1, static_cast<char>(first + i));
  }
  return out;
}

}  // namespace

Rational RandomRational(Rng& rng, std::int64_t max_abs_numerator,
                        std::int64_t max_denominator) {
  std::uniform_int_distribution<std::int64_t> num(-max_abs_numerator,
                                                  max_abs_numerator);
  std::uniform_int_distribution<std::int64_t> den(1, max_denominator);
  const std::int64_t p = num(rng);
  return Rational(p, den(rng));
}

BimatrixGame RandomGame(Rng& rng, std::size_t rows, std::size_t cols) {
  BimatrixGame::Grid grid(rows, std::vector<PayoffPair>(cols));
  for (auto& row : grid) {
    for (auto& cell : row) {
      cell.p1 = RandomRational(rng);
      cell.p2 = RandomRational(rng);
    }
  }
  return MakeGame(Labels('A', rows), Labels('A' + rows, cols), std::move(grid));
}

BimatrixGame RandomGenericGame(Rng& rng, std::size_t rows, std::size_t cols) {
  while (true) {
    BimatrixGame game = RandomGame(rng, rows, cols);
    if (IsGeneric(game)) return game;
  }
}

UnitaryParams RandomParams(Rng& rng) {
  std::uniform_real_distribution<double> theta(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  const double t = theta(rng);
  const double a = phase(rng);
  return UnitaryParams::Float(t, a, phase(rng));
}

DilemmaPayoffs RandomDilemmaPayoffs(Rng& rng) {
  while (true) {
    DilemmaPayoffs d{RandomRational(rng), RandomRational(rng),
                     RandomRational(rng), RandomRational(rng)};
    if (d.temptation > d.reward && d.reward > d.punishment &&
        d.punishment > d.sucker &&
        Rational(2) * d.reward > d.temptation + d.sucker) {
      return d;
    }
  }
}

}  // namespace ewlext
