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

#include "ewlext/rational.h"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace ewlext {
namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by digits.
bool IsSignedDigits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return IsDigits(s);
}

mpz_class ParseInteger(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

[[noreturn]] void Malformed(std::string_view text) {
  throw std::invalid_argument("malformed rational: \"" + std::string(text) +
                              "\"");
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                     mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);

  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const std::string_view mantissa = s.substr(0, e);
    const std::string_view exponent = s.substr(e + 1);
    if (mantissa.find('/') != std::string_view::npos ||
        !IsSignedDigits(exponent) || exponent.size() > 5) {
      Malformed(text);
    }
    const long power = ParseInteger(exponent).get_si();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(power)));
    Rational r = Parse(mantissa);
    if (power >= 0) {
      r.value_ *= scale;
    } else {
      r.value_ /= scale;
    }
    return r;
  }

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    if (!IsSignedDigits(num) || !IsDigits(den)) Malformed(text);
    mpz_class d = ParseInteger(den);
    if (d == 0) throw std::invalid_argument("zero denominator in \"" +
                                            std::string(text) + "\"");
    mpq_class q(ParseInteger(num), d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !IsDigits(whole)) ||
        (!frac.empty() && !IsDigits(frac))) {
      Malformed(text);
    }
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpq_class q(mpz_class(digits, 10), scale);
    q.canonicalize();
    if (negative) q = -q;
    return Rational(std::move(q));
  }

  if (!IsSignedDigits(s)) Malformed(text);
  return Rational(mpq_class(ParseInteger(s)));
}

std::optional<Rational> Rational::Approximate(double value, double tolerance,
                                              std::int64_t max_denominator) {
  if (!std::isfinite(value)) return std::nullopt;
  // Continued-fraction convergents of the exact binary value.
  const mpq_class target(value);
  mpq_class rest = target;
  mpz_class h_prev = 0, h = 1, k_prev = 1, k = 0;
  for (int step = 0; step < 64; ++step) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    mpq_class candidate(h, k);
    candidate.canonicalize();
    if (std::abs(candidate.get_d() - value) <= tolerance) {
      return Rational(std::move(candidate));
    }
    mpq_class frac = rest - a;
    if (frac == 0) break;
    rest = 1 / frac;
  }
  return std::nullopt;
}

std::string Rational::ToString() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::Numerator() const { return value_.get_num().get_str(); }
std::string Rational::Denominator() const { return value_.get_den().get_str(); }
bool Rational::IsInteger() const { return value_.get_den() == 1; }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.IsZero()) throw std::domain_error("rational division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Abs(const Rational& r) { return r.Sign() < 0 ? -r : r; }

std::int64_t Floor(const Rational& r) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), r.value_.get_num_mpz_t(),
             r.value_.get_den_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("floor out of range");
  return f.get_si();
}

}  // namespace ewlext
