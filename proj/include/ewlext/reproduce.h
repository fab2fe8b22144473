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

// The published numeric results about Q-extensions of the Prisoner's Dilemma
// and its invariant extensions, recomputed and compared with the expected
// values.

#ifndef EWLEXT_REPRODUCE_H_
#define EWLEXT_REPRODUCE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ewlext/game.h"
#include "ewlext/io.h"

namespace ewlext {

struct ClaimResult {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct ReproduceOptions {
  // The 2x2 game the Q-extension claims are computed from. Swapping in a
  // different game is how the negative control is run.
  BimatrixGame dilemma = PrisonersDilemma();
  std::uint64_t seed = 20240917;
  // Random (R, S, T, P) tuples for the general Type II claim.
  std::size_t dilemma_samples = 5;
};

std::vector<ClaimResult> RunReproduction(const ReproduceOptions& options = {});

bool AllPass(const std::vector<ClaimResult>& claims);
std::string FormatClaims(const std::vector<ClaimResult>& claims);
Json ClaimsToJson(const std::vector<ClaimResult>& claims);

}  // namespace ewlext

#endif  // EWLEXT_REPRODUCE_H_
