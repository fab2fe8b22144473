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

#ifndef EWLEXT_LINEAR_SYSTEM_H_
#define EWLEXT_LINEAR_SYSTEM_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "ewlext/scalar.h"

namespace ewlext {

template <typename T>
struct LinearSystem {
  explicit LinearSystem(std::size_t num_vars) : num_vars(num_vars) {}

  void AddEquation(std::vector<T> coeffs, T rhs_value) {
    coeffs.resize(num_vars);
    rows.push_back(std::move(coeffs));
    rhs.push_back(std::move(rhs_value));
  }

  std::size_t num_vars;
  std::vector<std::vector<T>> rows;
  std::vector<T> rhs;
};

enum class SolutionKind { kInconsistent, kUnique, kUnderdetermined };

template <typename T>
struct LinearSolution {
  SolutionKind kind = SolutionKind::kInconsistent;
  // For kUnique the solution; for kUnderdetermined the particular solution
  // with every free variable set to zero; empty when inconsistent.
  std::vector<T> values;
  std::size_t rank = 0;
};

// Gauss-Jordan elimination. Exact fields pivot on the first nonzero entry;
// floating fields use partial pivoting and treat magnitudes within
// kFloatTolerance as zero.
template <typename T>
LinearSolution<T> Solve(LinearSystem<T> system) {
  using Traits = ScalarTraits<T>;
  auto& a = system.rows;
  auto& b = system.rhs;
  const std::size_t num_rows = a.size();
  const std::size_t num_cols = system.num_vars;

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < num_cols && r < num_rows; ++c) {
    std::size_t best = num_rows;
    for (std::size_t i = r; i < num_rows; ++i) {
      if (Traits::IsZero(a[i][c])) continue;
      if (best == num_rows) {
        best = i;
        if constexpr (Traits::kExact) break;
      } else if (Traits::Magnitude(a[best][c]) < Traits::Magnitude(a[i][c])) {
        best = i;
      }
    }
    if (best == num_rows) continue;
    std::swap(a[r], a[best]);
    std::swap(b[r], b[best]);

    const T pivot = a[r][c];
    for (std::size_t k = c; k < num_cols; ++k) a[r][k] /= pivot;
    b[r] /= pivot;
    for (std::size_t i = 0; i < num_rows; ++i) {
      if (i == r || Traits::IsZero(a[i][c])) continue;
      const T factor = a[i][c];
      for (std::size_t k = c; k < num_cols; ++k) a[i][k] -= factor * a[r][k];
      b[i] -= factor * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  LinearSolution<T> solution;
  solution.rank = r;
  for (std::size_t i = r; i < num_rows; ++i) {
    if (!Traits::IsZero(b[i])) return solution;
  }
  solution.values.assign(num_cols, T{});
  for (std::size_t i = 0; i < r; ++i) solution.values[pivot_cols[i]] = b[i];
  solution.kind =
      r == num_cols ? SolutionKind::kUnique : SolutionKind::kUnderdetermined;
  return solution;
}

}  // namespace ewlext

#endif  // EWLEXT_LINEAR_SYSTEM_H_
