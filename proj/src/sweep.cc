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

#include "ewlext/sweep.h"

#include <algorithm>
#include <sstream>

#include "ewlext/nash.h"

namespace ewlext {
namespace {

template <typename T>
void Summarize(const EquilibriumReport<T>& report, SweepRow& row) {
  row.solved = true;
  row.n_pure = report.pure.size();
  row.n_mixed = report.mixed.size();
  row.degenerate = report.degenerate;
  const Payoff<T>* first = nullptr;
  if (!report.pure.empty()) {
    first = &report.pure.front().payoff;
  } else if (!report.mixed.empty()) {
    first = &report.mixed.front().payoff;
  }
  if (first) {
    row.payoff1 = ScalarTraits<T>::Format(first->p1);
    row.payoff2 = ScalarTraits<T>::Format(first->p2);
  }
}

SweepRow EvaluatePoint(const BimatrixGame& game, const UnitaryParams& params,
                       bool allow_float_solve) {
  SweepRow row;
  row.params = params;
  row.cls = Classify(params);
  const ExtendedGame ext = BuildExtension(game, params);
  row.exact = ext.exact();
  if (ext.exact()) {
    Summarize(SupportEnumerationSerial(*ext.exact_game), row);
  } else if (allow_float_solve) {
    Summarize(SupportEnumerationSerial(ext.real_game), row);
  }
  return row;
}

void Tally(const ExtensionClass& cls, Census& census) {
  ++census.total;
  switch (cls.tag) {
    case ExtensionClass::Tag::kTypeI:
      ++census.type_i;
      break;
    case ExtensionClass::Tag::kTypeII:
      ++census.type_ii;
      break;
    case ExtensionClass::Tag::kTypeIII:
      ++census.type_iii;
      break;
    case ExtensionClass::Tag::kNonInvariant:
      break;
  }
}

std::vector<UnitaryParams> PhaseGrid(const Angle& theta,
                                     std::int64_t phase_steps) {
  SweepOptions options;
  options.thetas = {theta};
  options.phase_steps = phase_steps;
  return SweepGrid(options);
}

bool Disagrees(const BimatrixGame& game, const UnitaryParams& params) {
  return Classify(params).IsInvariant() !=
         EmpiricalInvariance(game, params).invariant;
}

}  // namespace

std::vector<UnitaryParams> SweepGrid(const SweepOptions& options) {
  if (options.phase_steps <= 0) {
    throw DomainError("phase_steps must be positive");
  }
  std::vector<Angle> thetas = options.thetas;
  std::stable_sort(thetas.begin(), thetas.end(),
                   [](const Angle& a, const Angle& b) {
                     return a.ToRadians() < b.ToRadians();
                   });
  std::vector<UnitaryParams> grid;
  for (const Angle& theta : thetas) {
    for (std::int64_t a = 0; a < options.phase_steps; ++a) {
      for (std::int64_t b = 0; b < options.phase_steps; ++b) {
        grid.emplace_back(theta,
                          Angle::PiMultiple(Rational(2 * a, options.phase_steps)),
                          Angle::PiMultiple(Rational(2 * b, options.phase_steps)));
      }
    }
  }
  return grid;
}

std::vector<SweepRow> Sweep(const BimatrixGame& game,
                            const SweepOptions& options) {
  if (game.NumRows() != 2 || game.NumCols() != 2) {
    throw GameError("sweeps need a 2x2 game");
  }
  const std::vector<UnitaryParams> grid = SweepGrid(options);
  std::vector<SweepRow> rows(grid.size());
  const int n = static_cast<int>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < n; ++k) {
    rows[k] = EvaluatePoint(game, grid[k], options.allow_float_solve);
  }
  return rows;
}

std::vector<SweepRow> SweepSerial(const BimatrixGame& game,
                                  const SweepOptions& options) {
  if (game.NumRows() != 2 || game.NumCols() != 2) {
    throw GameError("sweeps need a 2x2 game");
  }
  std::vector<SweepRow> rows;
  for (const UnitaryParams& params : SweepGrid(options)) {
    rows.push_back(EvaluatePoint(game, params, options.allow_float_solve));
  }
  return rows;
}

std::string SweepCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "theta,alpha,beta,class,n_pure,n_mixed,payoff1,payoff2\n";
  for (const SweepRow& row : rows) {
    os << row.params.theta().ToString() << ',' << row.params.alpha().ToString()
       << ',' << row.params.beta().ToString() << ',' << ClassName(row.cls.tag);
    if (row.solved) {
      os << ',' << row.n_pure << ',' << row.n_mixed << ',' << row.payoff1
         << ',' << row.payoff2;
    } else {
      os << ",,,,";
    }
    os << '\n';
  }
  return os.str();
}

Census ClassifierCensus(const Angle& theta, std::int64_t phase_steps) {
  const std::vector<UnitaryParams> grid = PhaseGrid(theta, phase_steps);
  std::vector<ExtensionClass> classes(grid.size());
  const int n = static_cast<int>(grid.size());
#pragma omp parallel for
  for (int k = 0; k < n; ++k) classes[k] = Classify(grid[k]);
  Census census;
  for (const auto& cls : classes) Tally(cls, census);
  return census;
}

Census ClassifierCensusSerial(const Angle& theta, std::int64_t phase_steps) {
  Census census;
  for (const UnitaryParams& params : PhaseGrid(theta, phase_steps)) {
    Tally(Classify(params), census);
  }
  return census;
}

AgreementReport ClassifierOracleAgreement(
    const std::vector<BimatrixGame>& games,
    const std::vector<UnitaryParams>& params) {
  const int num_params = static_cast<int>(params.size());
  const int n = static_cast<int>(games.size()) * num_params;
  std::size_t disagreements = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : disagreements)
  for (int k = 0; k < n; ++k) {
    if (Disagrees(games[k / num_params], params[k % num_params])) {
      ++disagreements;
    }
  }
  return {static_cast<std::size_t>(n), disagreements};
}

AgreementReport ClassifierOracleAgreementSerial(
    const std::vector<BimatrixGame>& games,
    const std::vector<UnitaryParams>& params) {
  AgreementReport report;
  for (const auto& game : games) {
    for (const auto& p : params) {
      ++report.checked;
      if (Disagrees(game, p)) ++report.disagreements;
    }
  }
  return report;
}

}  // namespace ewlext
