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

#ifndef EWLEXT_ANGLE_H_
#define EWLEXT_ANGLE_H_

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ewlext/rational.h"

namespace ewlext {

// An input value lies outside its mathematical domain (e.g. theta > pi).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Either an exact rational multiple of pi or a plain radian value.
class Angle {
 public:
  Angle() : Angle(PiMultiple(Rational(0))) {}

  static Angle PiMultiple(Rational multiple) {
    return Angle(true, std::move(multiple), 0.0);
  }
  static Angle Radians(double radians) {
    return Angle(false, Rational(0), radians);
  }

  // "0", "pi", "-pi", "3pi", "1/2pi", "3/4*pi" (exact) or decimal radians
  // such as "1.5707963". Throws std::invalid_argument on malformed text.
  static Angle Parse(std::string_view text);

  bool IsExact() const { return exact_; }
  // Only meaningful when IsExact().
  const Rational& Multiple() const { return multiple_; }
  double ToRadians() const {
    return exact_ ? multiple_.ToDouble() * std::numbers::pi : radians_;
  }

  // Inverse of Parse for exact angles; 17 significant digits otherwise.
  std::string ToString() const;

  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  Angle(bool exact, Rational multiple, double radians)
      : exact_(exact), multiple_(std::move(multiple)), radians_(radians) {}

  bool exact_;
  Rational multiple_;
  double radians_;
};

// cos(r*pi) when it is rational. By Niven's theorem that happens exactly for
// values in {0, +-1/2, +-1}.
std::optional<Rational> ExactCos(const Rational& pi_multiple);
std::optional<Rational> ExactSin(const Rational& pi_multiple);

// Parameters (theta, alpha, beta) of the SU(2) strategy. Construction reduces
// alpha and beta into [0, 2*pi) and rejects theta outside [0, pi].
class UnitaryParams {
 public:
  UnitaryParams() = default;
  UnitaryParams(Angle theta, Angle alpha, Angle beta);

  static UnitaryParams Exact(const Rational& theta, const Rational& alpha,
                             const Rational& beta);
  static UnitaryParams Float(double theta, double alpha, double beta);

  // I = U(0, 0, 0), iX = U(pi, 0, 0), Q = U(0, pi/2, 0).
  static UnitaryParams Identity();
  static UnitaryParams FlipX();
  static UnitaryParams Q();

  const Angle& theta() const { return theta_; }
  const Angle& alpha() const { return alpha_; }
  const Angle& beta() const { return beta_; }

  // True when all three angles are exact multiples of pi.
  bool IsExact() const;

  std::string ToString() const;

  friend bool operator==(const UnitaryParams&, const UnitaryParams&) = default;

 private:
  Angle theta_;
  Angle alpha_;
  Angle beta_;
};

}  // namespace ewlext

#endif  // EWLEXT_ANGLE_H_
