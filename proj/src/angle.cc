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

#include "ewlext/angle.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace ewlext {
namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// r mod 2, in [0, 2).
Rational ReduceModTwo(const Rational& r) {
  const Rational two(2);
  return r - two * Rational(Floor(r / two));
}

}  // namespace

Angle Angle::Parse(std::string_view text) {
  std::string_view s = Trim(text);
  if (s.empty()) throw std::invalid_argument("empty angle");
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    std::string_view coeff = s.substr(0, s.size() - 2);
    if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
    if (coeff.empty() || coeff == "+") return PiMultiple(Rational(1));
    if (coeff == "-") return PiMultiple(Rational(-1));
    try {
      return PiMultiple(Rational::Parse(coeff));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed angle \"" + std::string(text) +
                                  "\"");
    }
  }
  try {
    // Plain rationals other than zero are read as radians; zero stays exact.
    if (s.find('/') == std::string_view::npos) {
      const Rational value = Rational::Parse(s);
      if (value.IsZero()) return PiMultiple(Rational(0));
      return Radians(value.ToDouble());
    }
  } catch (const std::invalid_argument&) {
  }
  const std::string owned(s);
  char* end = nullptr;
  const double radians = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size() || !std::isfinite(radians)) {
    throw std::invalid_argument("malformed angle \"" + std::string(text) + "\"");
  }
  return Radians(radians);
}

std::string Angle::ToString() const {
  if (!exact_) {
    // Shortest form that reads back to the same double.
    char buffer[40];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), radians_);
    return std::string(buffer, result.ptr);
  }
  if (multiple_.IsZero()) return "0";
  if (multiple_ == Rational(1)) return "pi";
  if (multiple_ == Rational(-1)) return "-pi";
  return multiple_.ToString() + "pi";
}

std::optional<Rational> ExactCos(const Rational& pi_multiple) {
  const Rational r = ReduceModTwo(pi_multiple);
  const Rational half(1, 2);
  if (r.IsZero()) return Rational(1);
  if (r == Rational(1)) return Rational(-1);
  if (r == half || r == Rational(3, 2)) return Rational(0);
  if (r == Rational(1, 3) || r == Rational(5, 3)) return half;
  if (r == Rational(2, 3) || r == Rational(4, 3)) return -half;
  return std::nullopt;
}

std::optional<Rational> ExactSin(const Rational& pi_multiple) {
  return ExactCos(pi_multiple - Rational(1, 2));
}

UnitaryParams::UnitaryParams(Angle theta, Angle alpha, Angle beta) {
  if (theta.IsExact()) {
    if (theta.Multiple().Sign() < 0 || theta.Multiple() > Rational(1)) {
      throw DomainError("theta = " + theta.ToString() + " outside [0, pi]");
    }
  } else if (!(theta.ToRadians() >= 0.0 &&
               theta.ToRadians() <= std::numbers::pi)) {
    throw DomainError("theta = " + theta.ToString() + " outside [0, pi]");
  }
  auto reduce = [](const Angle& a) {
    if (a.IsExact()) return Angle::PiMultiple(ReduceModTwo(a.Multiple()));
    double r = std::fmod(a.ToRadians(), kTwoPi);
    if (r < 0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return Angle::Radians(r);
  };
  theta_ = std::move(theta);
  alpha_ = reduce(alpha);
  beta_ = reduce(beta);
}

UnitaryParams UnitaryParams::Exact(const Rational& theta, const Rational& alpha,
                                   const Rational& beta) {
  return UnitaryParams(Angle::PiMultiple(theta), Angle::PiMultiple(alpha),
                       Angle::PiMultiple(beta));
}

UnitaryParams UnitaryParams::Float(double theta, double alpha, double beta) {
  return UnitaryParams(Angle::Radians(theta), Angle::Radians(alpha),
                       Angle::Radians(beta));
}

UnitaryParams UnitaryParams::Identity() {
  return Exact(Rational(0), Rational(0), Rational(0));
}

UnitaryParams UnitaryParams::FlipX() {
  return Exact(Rational(1), Rational(0), Rational(0));
}

UnitaryParams UnitaryParams::Q() {
  return Exact(Rational(0), Rational(1, 2), Rational(0));
}

bool UnitaryParams::IsExact() const {
  return theta_.IsExact() && alpha_.IsExact() && beta_.IsExact();
}

std::string UnitaryParams::ToString() const {
  return "U(" + theta_.ToString() + ", " + alpha_.ToString() + ", " +
         beta_.ToString() + ")";
}

}  // namespace ewlext
