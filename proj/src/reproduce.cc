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

#include "ewlext/reproduce.h"

#include <sstream>

#include "ewlext/ewl.h"
#include "ewlext/extension.h"
#include "ewlext/nash.h"
#include "ewlext/sampling.h"
#include "ewlext/sweep.h"

namespace ewlext {
namespace {

std::string Tuple(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].ToString();
  }
  return out + ")";
}

std::string PayoffText(const PayoffPair& p) {
  return "(" + p.p1.ToString() + "," + p.p2.ToString() + ")";
}

// "pure [(U,U)->(3,3)] mixed []", with " degenerate" appended if flagged.
std::string Summary(const EquilibriumReport<Rational>& report,
                    const BimatrixGame& game) {
  std::string out = "pure [";
  for (std::size_t k = 0; k < report.pure.size(); ++k) {
    const auto& eq = report.pure[k];
    if (k) out += "; ";
    out += "(" + game.RowLabels()[eq.row] + "," + game.ColLabels()[eq.col] +
           ")->" + PayoffText(eq.payoff);
  }
  out += "] mixed [";
  for (std::size_t k = 0; k < report.mixed.size(); ++k) {
    const auto& eq = report.mixed[k];
    if (k) out += "; ";
    out += "(" + Tuple(eq.profile.p1) + "," + Tuple(eq.profile.p2) + ")->" +
           PayoffText(eq.payoff);
  }
  out += "]";
  if (report.degenerate) out += " degenerate";
  return out;
}

ClaimResult ExactClaim(std::string id, std::string description,
                       std::string expected, std::string computed) {
  const bool pass = expected == computed;
  return {std::move(id), std::move(description), std::move(expected),
          std::move(computed), pass};
}

BimatrixGame QExtension(const BimatrixGame& game) {
  return *BuildExtension(game, UnitaryParams::Q(), "Q").exact_game;
}

std::string SolveSummary(const BimatrixGame& game) {
  return Summary(SupportEnumeration(game), game);
}

ClaimResult GeneralTypeTwoClaim(const ReproduceOptions& options) {
  Rng rng(options.seed);
  std::size_t matched = 0;
  std::string first_failure;
  for (std::size_t s = 0; s < options.dilemma_samples; ++s) {
    const DilemmaPayoffs d = RandomDilemmaPayoffs(rng);
    const BimatrixGame pd =
        PrisonersDilemma(d.reward, d.sucker, d.temptation, d.punishment);
    const BimatrixGame ext = *BuildTypeMatrix(pd, ExtensionType::kTypeII).exact_game;
    const Rational value =
        (d.reward + d.sucker + d.temptation + d.punishment) / Rational(4);
    const std::vector<Rational> q{Rational(1, 4), Rational(1, 4), Rational(1, 2)};
    const std::string expected = "pure [] mixed [(" + Tuple(q) + "," + Tuple(q) +
                                 ")->" + PayoffText({value, value}) + "]";
    const std::string computed = SolveSummary(ext);
    if (computed == expected) {
      ++matched;
    } else if (first_failure.empty()) {
      first_failure = "; first mismatch at (R,S,T,P)=" +
                      Tuple({d.reward, d.sucker, d.temptation, d.punishment}) +
                      ": " + computed;
    }
  }
  const std::string n = std::to_string(options.dilemma_samples);
  return ExactClaim(
      "type2-general",
      "Type II extension of random dilemmas has the unique equilibrium "
      "((1/4,1/4,1/2),(1/4,1/4,1/2)) paying (R+S+T+P)/4",
      n + "/" + n + " tuples match",
      std::to_string(matched) + "/" + n + " tuples match" + first_failure);
}

}  // namespace

std::vector<ClaimResult> RunReproduction(const ReproduceOptions& options) {
  std::vector<ClaimResult> claims;
  const BimatrixGame& pd = options.dilemma;

  claims.push_back(ExactClaim("pd-nash",
                              "the 2x2 dilemma has the unique equilibrium (D,D)",
                              "pure [(D,D)->(1,1)] mixed []",
                              SolveSummary(pd)));

  const BimatrixGame q_ext = QExtension(pd);
  const BimatrixGame tabulated = MakeGame(
      {"I", "iX", "Q"}, {"I", "iX", "Q"},
      {{{3, 3}, {0, 5}, {1, 1}}, {{5, 0}, {1, 1}, {0, 5}}, {{1, 1}, {5, 0}, {3, 3}}});
  claims.push_back(ExactClaim("q-table",
                              "extension by Q = U(0,pi/2,0) matches the "
                              "tabulated 3x3 bimatrix",
                              FormatTable(tabulated), FormatTable(q_ext)));

  const StateVector4 qq = FinalState(UnitaryParams::Q(), UnitaryParams::Q());
  const StateVector4 ket00{{Complex(1.0), Complex(), Complex(), Complex()}};
  claims.push_back(ExactClaim("q-state",
                              "statevector for (Q,Q) is |00> up to phase, so "
                              "u(Q,Q) is the (C,C) payoff",
                              "|00>",
                              SameUpToPhase(qq, ket00) ? "|00>" : "other"));

  claims.push_back(ExactClaim("q-nash",
                              "Q-extension has the unique equilibrium (Q,Q) "
                              "paying (3,3)",
                              "pure [(Q,Q)->(3,3)] mixed []",
                              SolveSummary(q_ext)));

  const std::string half = "((1/2,0,1/2),(1/2,0,1/2))";
  claims.push_back(ExactClaim(
      "q-rowswap-nash",
      "Q-extension of the row-swapped dilemma: no pure equilibrium, unique "
      "mixed one paying (5/2,5/2)",
      "pure [] mixed [" + half + "->(5/2,5/2)]",
      SolveSummary(QExtension(Variant(pd, VariantKind::kRowSwap)))));

  {
    const std::string computed =
        SolveSummary(QExtension(Variant(pd, VariantKind::kColSwap)));
    ClaimResult claim{"q-colswap-nash",
                      "Q-extension of the column-swapped dilemma has the "
                      "equilibrium " + half,
                      "contains " + half, computed,
                      computed.find(half) != std::string::npos};
    claims.push_back(std::move(claim));
  }

  claims.push_back(ExactClaim(
      "q-rowcolswap-nash",
      "Q-extension of the rows-and-columns-swapped dilemma has the unique "
      "equilibrium paying 51/25 each",
      "pure [] mixed [((14/25,2/25,9/25),(14/25,2/25,9/25))->(51/25,51/25)]",
      SolveSummary(QExtension(Variant(pd, VariantKind::kRowColSwap)))));

  {
    const auto phi =
        FindIsomorphism(q_ext, QExtension(Variant(pd, VariantKind::kRowSwap)));
    claims.push_back(ExactClaim("q-noninvariance",
                                "Q-extensions of the dilemma and its row-swapped "
                                "form are not strongly isomorphic",
                                "no isomorphism",
                                phi ? "isomorphic" : "no isomorphism"));
  }

  {
    const Census c = ClassifierCensus(Angle::PiMultiple(Rational(1, 2)), 8);
    std::ostringstream os;
    os << c.invariant() << " = " << c.type_i << " TypeI + " << c.type_ii
       << " TypeII + " << c.type_iii << " TypeIII";
    claims.push_back(ExactClaim("census",
                                "invariant operators on the pi/4 grid at "
                                "theta = pi/2",
                                "24 = 4 TypeI + 4 TypeII + 16 TypeIII",
                                os.str()));
  }

  {
    const BimatrixGame ext = *BuildTypeMatrix(pd, ExtensionType::kTypeII).exact_game;
    claims.push_back(ExactClaim("type2-pd",
                                "Type II extension of the dilemma has the unique "
                                "equilibrium paying (9/4,9/4)",
                                "pure [] mixed [((1/4,1/4,1/2),(1/4,1/4,1/2))->"
                                "(9/4,9/4)]",
                                SolveSummary(ext)));
  }

  claims.push_back(GeneralTypeTwoClaim(options));
  return claims;
}

bool AllPass(const std::vector<ClaimResult>& claims) {
  for (const auto& c : claims) {
    if (!c.pass) return false;
  }
  return true;
}

std::string FormatClaims(const std::vector<ClaimResult>& claims) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : claims) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.description << "\n";
    // Tables span several lines; indent continuation lines.
    for (const auto* field : {&c.expected, &c.computed}) {
      std::string value = *field;
      while (!value.empty() && value.back() == '\n') value.pop_back();
      std::string indented;
      for (char ch : value) {
        indented += ch;
        if (ch == '\n') indented += "            ";
      }
      os << (field == &c.expected ? "  expected: " : "  computed: ") << indented
         << "\n";
    }
    passed += c.pass;
  }
  os << passed << "/" << claims.size() << " claims pass\n";
  return os.str();
}

Json ClaimsToJson(const std::vector<ClaimResult>& claims) {
  Json list = Json::array();
  for (const auto& c : claims) {
    list.push_back({{"id", c.id},
                    {"description", c.description},
                    {"expected", c.expected},
                    {"computed", c.computed},
                    {"pass", c.pass}});
  }
  Json out;
  out["claims"] = std::move(list);
  out["all_pass"] = AllPass(claims);
  return out;
}

}  // namespace ewlext
