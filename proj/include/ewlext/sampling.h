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

#ifndef EWLEXT_SAMPLING_H_
#define EWLEXT_SAMPLING_H_

#include <cstddef>
#include <cstdint>
#include <random>

#include "ewlext/angle.h"
#include "ewlext/game.h"

namespace ewlext {

using Rng = std::mt19937_64;

// p/q with |p| <= max_abs_numerator and 1 <= q <= max_denominator.
Rational RandomRational(Rng& rng, std::int64_t max_abs_numerator = 20,
                        std::int64_t max_denominator = 6);

BimatrixGame RandomGame(Rng& rng, std::size_t rows = 2, std::size_t cols = 2);

// Rejection-samples until each player's payoffs are pairwise distinct.
BimatrixGame RandomGenericGame(Rng& rng, std::size_t rows = 2,
                               std::size_t cols = 2);

// Uniform theta in [0, pi], alpha and beta in [0, 2*pi).
UnitaryParams RandomParams(Rng& rng);

struct DilemmaPayoffs {
  Rational reward, sucker, temptation, punishment;
};

// Rational (R, S, T, P) with T > R > P > S and 2R > T + S.
DilemmaPayoffs RandomDilemmaPayoffs(Rng& rng);

}  // namespace ewlext

#endif  // EWLEXT_SAMPLING_H_
