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

#include "ewlext/extension.h"

#include <cmath>
#include <numbers>

namespace ewlext {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

// Squared trigonometric weights shared by the five extension cells.
template <typename T>
struct CellWeights {
  T cos2_half_theta;  // cos^2(theta/2)
  T sin2_half_theta;  // sin^2(theta/2)
  T cos2_alpha, sin2_alpha;
  T cos2_beta, sin2_beta;
  // u(U,U) = d00 * uu_00 + (d01 + d10) * uu_mixed + d11 * uu_11
  T uu_00, uu_mixed, uu_11;
};

CellWeights<double> FloatWeights(const UnitaryParams& p) {
  const double t = p.theta().ToRadians();
  const double a = p.alpha().ToRadians();
  const double b = p.beta().ToRadians();
  const double c2 = std::pow(std::cos(t / 2), 2);
  const double s2 = std::pow(std::sin(t / 2), 2);
  CellWeights<double> w;
  w.cos2_half_theta = c2;
  w.sin2_half_theta = s2;
  w.cos2_alpha = std::pow(std::cos(a), 2);
  w.sin2_alpha = std::pow(std::sin(a), 2);
  w.cos2_beta = std::pow(std::cos(b), 2);
  w.sin2_beta = std::pow(std::sin(b), 2);
  w.uu_00 = std::pow(std::cos(2 * a) * c2 + std::sin(2 * b) * s2, 2);
  w.uu_mixed = 0.25 * std::pow(std::cos(a - b) + std::sin(a - b), 2) *
               std::pow(std::sin(t), 2);
  w.uu_11 = std::pow(std::sin(2 * a) * c2 - std::cos(2 * b) * s2, 2);
  return w;
}

// Exact weights when cos(theta), cos/sin(2 alpha), cos/sin(2 beta) and
// sin(2(alpha - beta)) are all rational.
std::optional<CellWeights<Rational>> ExactWeights(const UnitaryParams& p) {
  const Rational& t = p.theta().Multiple();
  const Rational& a = p.alpha().Multiple();
  const Rational& b = p.beta().Multiple();
  const Rational two(2);
  const auto cos_t = ExactCos(t);
  const auto cos_2a = ExactCos(two * a);
  const auto sin_2a = ExactSin(two * a);
  const auto cos_2b = ExactCos(two * b);
  const auto sin_2b = ExactSin(two * b);
  const auto sin_2d = ExactSin(two * (a - b));
  if (!cos_t || !cos_2a || !sin_2a || !cos_2b || !sin_2b || !sin_2d) {
    return std::nullopt;
  }
  const Rational one(1);
  const Rational half(1, 2);
  CellWeights<Rational> w;
  w.cos2_half_theta = (one + *cos_t) * half;
  w.sin2_half_theta = (one - *cos_t) * half;
  w.cos2_alpha = (one + *cos_2a) * half;
  w.sin2_alpha = (one - *cos_2a) * half;
  w.cos2_beta = (one + *cos_2b) * half;
  w.sin2_beta = (one - *cos_2b) * half;
  const Rational x00 = *cos_2a * w.cos2_half_theta + *sin_2b * w.sin2_half_theta;
  const Rational x11 = *sin_2a * w.cos2_half_theta - *cos_2b * w.sin2_half_theta;
  w.uu_00 = x00 * x00;
  // (cos d + sin d)^2 = 1 + sin 2d and sin^2 theta = 1 - cos^2 theta.
  w.uu_mixed = (one + *sin_2d) * (one - *cos_t * *cos_t) / Rational(4);
  w.uu_11 = x11 * x11;
  return w;
}

template <typename T>
Payoff<T> Combine(const std::array<const Payoff<T>*, 4>& d,
                  const std::array<T, 4>& weights) {
  Payoff<T> out{T(0), T(0)};
  for (std::size_t k = 0; k < 4; ++k) {
    out.p1 += weights[k] * d[k]->p1;
    out.p2 += weights[k] * d[k]->p2;
  }
  return out;
}

std::vector<std::string> ExtensionLabels(const std::string& unitary_label) {
  return {"I", "iX", unitary_label};
}

template <typename T>
Game<T> FillExtension(const Game<T>& source, const CellWeights<T>& w,
                      const std::string& unitary_label) {
  const std::array<const Payoff<T>*, 4> d{&source.At(0, 0), &source.At(0, 1),
                                          &source.At(1, 0), &source.At(1, 1)};
  const T& c2 = w.cos2_half_theta;
  const T& s2 = w.sin2_half_theta;
  const T ca = w.cos2_alpha * c2, sa = w.sin2_alpha * c2;
  const T cb = w.cos2_beta * s2, sb = w.sin2_beta * s2;

  typename Game<T>::Grid grid(3, std::vector<Payoff<T>>(3));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) grid[i][j] = source.At(i, j);
  grid[2][0] = Combine(d, {ca, sb, cb, sa});  // u(U, I)
  grid[2][1] = Combine(d, {sb, ca, sa, cb});  // u(U, iX)
  grid[0][2] = Combine(d, {ca, cb, sb, sa});  // u(I, U)
  grid[1][2] = Combine(d, {sb, sa, ca, cb});  // u(iX, U)
  grid[2][2] = Combine(d, {w.uu_00, w.uu_mixed, w.uu_mixed, w.uu_11});
  const auto labels = ExtensionLabels(unitary_label);
  return Game<T>(labels, labels, std::move(grid));
}

void RequireTwoByTwo(const BimatrixGame& game) {
  if (game.NumRows() != 2 || game.NumCols() != 2) {
    throw GameError("extensions are defined for 2x2 games only");
  }
}

bool IsOdd(std::int64_t v) { return v % 2 != 0; }

ExtensionClass FromWitness(std::int64_t k, std::int64_t l,
                           bool alpha_multiple_of_pi) {
  ExtensionClass cls;
  if (IsOdd(k) && IsOdd(l)) return cls;
  cls.witness = {k, l};
  if (IsOdd(k) != IsOdd(l)) {
    cls.tag = ExtensionClass::Tag::kTypeIII;
  } else {
    cls.tag = alpha_multiple_of_pi ? ExtensionClass::Tag::kTypeI
                                   : ExtensionClass::Tag::kTypeII;
  }
  return cls;
}

ExtensionClass ClassifyExact(const UnitaryParams& p) {
  if (p.theta().Multiple() != Rational(1, 2)) return {};
  const Rational& a = p.alpha().Multiple();
  const Rational& b = p.beta().Multiple();
  const Rational k = Rational(2) * (a - b);
  const Rational l = Rational(2) * (a + b);
  if (!k.IsInteger() || !l.IsInteger()) return {};
  return FromWitness(Floor(k), Floor(l), a.IsInteger());
}

// Integer n with |x - n*kHalfPi| <= kClassifyTolerance.
std::optional<std::int64_t> NearestHalfPiMultiple(double x) {
  const double n = std::round(x / kHalfPi);
  if (std::abs(x - n * kHalfPi) > kClassifyTolerance) return std::nullopt;
  return static_cast<std::int64_t>(n);
}

ExtensionClass ClassifyFloat(const UnitaryParams& p) {
  if (std::abs(p.theta().ToRadians() - kHalfPi) > kClassifyTolerance) return {};
  const double a = p.alpha().ToRadians();
  const double b = p.beta().ToRadians();
  const auto k = NearestHalfPiMultiple(a - b);
  const auto l = NearestHalfPiMultiple(a + b);
  if (!k || !l) return {};
  const std::int64_t alpha_steps = (*k + *l) / 2;  // alpha / (pi/2) if even
  return FromWitness(*k, *l, alpha_steps % 2 == 0);
}

}  // namespace

std::optional<ExtensionType> ExtensionClass::Type() const {
  switch (tag) {
    case Tag::kTypeI:
      return ExtensionType::kTypeI;
    case Tag::kTypeII:
      return ExtensionType::kTypeII;
    case Tag::kTypeIII:
      return ExtensionType::kTypeIII;
    case Tag::kNonInvariant:
      break;
  }
  return std::nullopt;
}

std::string_view ClassName(ExtensionClass::Tag tag) {
  switch (tag) {
    case ExtensionClass::Tag::kTypeI:
      return "TypeI";
    case ExtensionClass::Tag::kTypeII:
      return "TypeII";
    case ExtensionClass::Tag::kTypeIII:
      return "TypeIII";
    case ExtensionClass::Tag::kNonInvariant:
      return "NonInvariant";
  }
  return "?";
}

std::string_view TypeName(ExtensionType type) {
  switch (type) {
    case ExtensionType::kTypeI:
      return "TypeI";
    case ExtensionType::kTypeII:
      return "TypeII";
    case ExtensionType::kTypeIII:
      return "TypeIII";
  }
  return "?";
}

ExtensionClass Classify(const UnitaryParams& params) {
  return params.IsExact() ? ClassifyExact(params) : ClassifyFloat(params);
}

UnitaryParams RepresentativeParams(ExtensionType type) {
  const Rational half(1, 2);
  switch (type) {
    case ExtensionType::kTypeI:
      return UnitaryParams::Exact(half, Rational(0), Rational(0));
    case ExtensionType::kTypeII:
      return UnitaryParams::Exact(half, half, half);
    case ExtensionType::kTypeIII:
      return UnitaryParams::Exact(half, Rational(1, 4), Rational(1, 4));
  }
  throw GameError("unknown extension type");
}

ExtendedGame BuildTypeMatrix(const BimatrixGame& game, ExtensionType type,
                             const std::string& unitary_label) {
  RequireTwoByTwo(game);
  const PayoffPair& d00 = game.At(0, 0);
  const PayoffPair& d01 = game.At(0, 1);
  const PayoffPair& d10 = game.At(1, 0);
  const PayoffPair& d11 = game.At(1, 1);
  auto mean = [](std::initializer_list<const PayoffPair*> cells) {
    PayoffPair out{Rational(0), Rational(0)};
    for (const PayoffPair* c : cells) {
      out.p1 += c->p1;
      out.p2 += c->p2;
    }
    const Rational n(static_cast<std::int64_t>(cells.size()));
    out.p1 /= n;
    out.p2 /= n;
    return out;
  };
  const PayoffPair all = mean({&d00, &d01, &d10, &d11});

  BimatrixGame::Grid grid(3, std::vector<PayoffPair>(3));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) grid[i][j] = game.At(i, j);
  grid[2][2] = all;
  switch (type) {
    case ExtensionType::kTypeI:
      grid[0][2] = mean({&d00, &d01});
      grid[1][2] = mean({&d10, &d11});
      grid[2][0] = mean({&d00, &d10});
      grid[2][1] = mean({&d01, &d11});
      break;
    case ExtensionType::kTypeII:
      grid[0][2] = mean({&d10, &d11});
      grid[1][2] = mean({&d00, &d01});
      grid[2][0] = mean({&d01, &d11});
      grid[2][1] = mean({&d00, &d10});
      break;
    case ExtensionType::kTypeIII:
      grid[0][2] = grid[1][2] = grid[2][0] = grid[2][1] = all;
      break;
  }
  const auto labels = ExtensionLabels(unitary_label);
  BimatrixGame exact(labels, labels, std::move(grid));
  RealGame real = ToReal(exact);
  return ExtendedGame{game, RepresentativeParams(type), std::move(exact),
                      std::move(real)};
}

ExtendedGame BuildExtension(const BimatrixGame& game,
                            const UnitaryParams& params,
                            const std::string& unitary_label) {
  RequireTwoByTwo(game);
  if (params.IsExact()) {
    if (const auto type = Classify(params).Type()) {
      ExtendedGame ext = BuildTypeMatrix(game, *type, unitary_label);
      ext.params = params;
      return ext;
    }
    if (const auto weights = ExactWeights(params)) {
      BimatrixGame exact = FillExtension(game, *weights, unitary_label);
      RealGame real = ToReal(exact);
      return ExtendedGame{game, params, std::move(exact), std::move(real)};
    }
  }
  RealGame real = FillExtension(ToReal(game), FloatWeights(params),
                                unitary_label);
  return ExtendedGame{game, params, std::nullopt, std::move(real)};
}

InvarianceVerdict EmpiricalInvariance(const BimatrixGame& game,
                                      const UnitaryParams& params) {
  InvarianceVerdict verdict;
  verdict.generic_input = IsGeneric(game);
  const ExtendedGame base = BuildExtension(game, params);
  verdict.invariant = true;
  for (std::size_t v = 0; v < 3; ++v) {
    const ExtendedGame other =
        BuildExtension(Variant(game, kAllVariantKinds[v]), params);
    if (base.exact() && other.exact()) {
      verdict.bijections[v] = FindIsomorphism(*base.exact_game, *other.exact_game);
    } else {
      verdict.bijections[v] = FindIsomorphism(base.real_game, other.real_game);
    }
    verdict.invariant = verdict.invariant && verdict.bijections[v].has_value();
  }
  return verdict;
}

}  // namespace ewlext
