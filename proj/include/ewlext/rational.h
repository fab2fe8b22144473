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

#ifndef EWLEXT_RATIONAL_H_
#define EWLEXT_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace ewlext {

// Exact arbitrary-precision fraction, always kept in lowest terms with a
// positive denominator. Thin value wrapper over GMP's mpq_class that turns
// division by zero and malformed text into exceptions.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(runtime/explicit)
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p", "p/q" and finite decimals such as "-2.75". Throws
  // std::invalid_argument on anything else or a zero denominator.
  static Rational Parse(std::string_view text);

  // Simplest fraction within `tolerance` of `value` whose denominator does not
  // exceed `max_denominator`, if one exists.
  static std::optional<Rational> Approximate(double value, double tolerance,
                                             std::int64_t max_denominator);

  // Reduced "p/q", or "p" when the denominator is one.
  std::string ToString() const;
  double ToDouble() const { return value_.get_d(); }

  std::string Numerator() const;
  std::string Denominator() const;
  bool IsInteger() const;
  bool IsZero() const { return sgn(value_) == 0; }
  int Sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  friend std::int64_t Floor(const Rational& r);

  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

Rational Abs(const Rational& r);

// Floor of a rational as a 64-bit integer; throws std::overflow_error if the
// result does not fit.
std::int64_t Floor(const Rational& r);

}  // namespace ewlext

#endif  // EWLEXT_RATIONAL_H_
