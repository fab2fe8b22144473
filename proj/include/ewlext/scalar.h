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

#ifndef EWLEXT_SCALAR_H_
#define EWLEXT_SCALAR_H_

#include <cmath>
#include <string>

#include "ewlext/rational.h"

namespace ewlext {

// Payoffs and probabilities live in one of two fields: exact rationals, or
// doubles compared with a fixed absolute tolerance. Everything templated on
// the field goes through these traits for zero tests and comparisons.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool kExact = true;
  static bool IsZero(const Rational& x) { return x.IsZero(); }
  static bool Equal(const Rational& a, const Rational& b) { return a == b; }
  static bool Less(const Rational& a, const Rational& b) { return a < b; }
  static bool IsNegative(const Rational& x) { return x.Sign() < 0; }
  static Rational Magnitude(const Rational& x) { return Abs(x); }
  static std::string Format(const Rational& x) { return x.ToString(); }
};

// Rank, equality and feasibility tolerance for floating-point games.
inline constexpr double kFloatTolerance = 1e-9;

template <>
struct ScalarTraits<double> {
  static constexpr bool kExact = false;
  static bool IsZero(double x) { return std::abs(x) <= kFloatTolerance; }
  static bool Equal(double a, double b) {
    return std::abs(a - b) <= kFloatTolerance;
  }
  // Strictly less by more than the tolerance.
  static bool Less(double a, double b) { return a < b - kFloatTolerance; }
  static bool IsNegative(double x) { return x < -kFloatTolerance; }
  static double Magnitude(double x) { return std::abs(x); }
  static std::string Format(double x);
};

// Twelve significant digits, no trailing zeros.
std::string FormatDouble(double x);

inline std::string ScalarTraits<double>::Format(double x) {
  return FormatDouble(x);
}

inline double ToDouble(const Rational& x) { return x.ToDouble(); }
inline double ToDouble(double x) { return x; }

}  // namespace ewlext

#endif  // EWLEXT_SCALAR_H_
