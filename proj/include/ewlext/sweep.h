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

// Grid sweeps over (theta, alpha, beta). Each grid point is independent, so
// the kernels run under OpenMP; every kernel has a serial twin used as the
// reference in tests and benchmarks. Output order is fixed: theta ascending,
// then alpha, then beta.

#ifndef EWLEXT_SWEEP_H_
#define EWLEXT_SWEEP_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ewlext/angle.h"
#include "ewlext/extension.h"
#include "ewlext/game.h"

namespace ewlext {

struct SweepOptions {
  std::vector<Angle> thetas;
  // alpha and beta range over {2*pi*k / phase_steps : 0 <= k < phase_steps}.
  std::int64_t phase_steps = 8;
  // Solve extensions that could only be built in floating point.
  bool allow_float_solve = false;
};

struct SweepRow {
  UnitaryParams params;
  ExtensionClass cls;
  bool exact = false;
  bool solved = false;
  std::size_t n_pure = 0;
  std::size_t n_mixed = 0;
  bool degenerate = false;
  // Payoff of the first reported equilibrium (pure before mixed), formatted.
  std::string payoff1;
  std::string payoff2;
};

std::vector<UnitaryParams> SweepGrid(const SweepOptions& options);

std::vector<SweepRow> Sweep(const BimatrixGame& game,
                            const SweepOptions& options);
std::vector<SweepRow> SweepSerial(const BimatrixGame& game,
                                  const SweepOptions& options);

// Header: theta,alpha,beta,class,n_pure,n_mixed,payoff1,payoff2. Unsolved
// rows leave the last four columns empty.
std::string SweepCsv(const std::vector<SweepRow>& rows);

struct Census {
  std::size_t total = 0;
  std::size_t type_i = 0;
  std::size_t type_ii = 0;
  std::size_t type_iii = 0;

  std::size_t invariant() const { return type_i + type_ii + type_iii; }
  friend bool operator==(const Census&, const Census&) = default;
};

// Classifies every (alpha, beta) on the phase grid at the given theta.
Census ClassifierCensus(const Angle& theta, std::int64_t phase_steps);
Census ClassifierCensusSerial(const Angle& theta, std::int64_t phase_steps);

struct AgreementReport {
  std::size_t checked = 0;
  std::size_t disagreements = 0;
};

// Counts (game, params) pairs where Classify and EmpiricalInvariance
// disagree about invariance.
AgreementReport ClassifierOracleAgreement(
    const std::vector<BimatrixGame>& games,
    const std::vector<UnitaryParams>& params);
AgreementReport ClassifierOracleAgreementSerial(
    const std::vector<BimatrixGame>& games,
    const std::vector<UnitaryParams>& params);

}  // namespace ewlext

#endif  // EWLEXT_SWEEP_H_
