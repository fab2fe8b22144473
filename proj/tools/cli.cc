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

#include "cli.h"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "ewlext/ewl.h"
#include "ewlext/extension.h"
#include "ewlext/io.h"
#include "ewlext/nash.h"
#include "ewlext/reproduce.h"
#include "ewlext/sweep.h"

namespace ewlext::cli {
namespace {

constexpr double kOracleTolerance = 1e-12;

// Errors that map to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read \"" + path + "\"");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write \"" + path + "\"");
  out << contents;
}

struct AngleArgs {
  std::string theta = "0";
  std::string alpha = "0";
  std::string beta = "0";

  void Register(CLI::App* cmd, bool required) {
    auto* t = cmd->add_option("--theta", theta, "theta in [0, pi], e.g. 1/2pi");
    auto* a = cmd->add_option("--alpha", alpha, "alpha, reduced mod 2pi");
    auto* b = cmd->add_option("--beta", beta, "beta, reduced mod 2pi");
    if (required) {
      t->required();
      a->required();
      b->required();
    }
  }

  UnitaryParams Parse() const {
    return UnitaryParams(Angle::Parse(theta), Angle::Parse(alpha),
                         Angle::Parse(beta));
  }
};

std::string DescribeBijection(const BimatrixGame& a, const BimatrixGame& b,
                              const StrategyBijection& phi) {
  std::string out = "rows {";
  for (std::size_t i = 0; i < phi.row_map.size(); ++i) {
    if (i) out += ", ";
    out += a.RowLabels()[i] + "->" + b.RowLabels()[phi.row_map[i]];
  }
  out += "} cols {";
  for (std::size_t j = 0; j < phi.col_map.size(); ++j) {
    if (j) out += ", ";
    out += a.ColLabels()[j] + "->" + b.ColLabels()[phi.col_map[j]];
  }
  return out + "}";
}

Json BijectionToJson(const BimatrixGame& a, const BimatrixGame& b,
                     const StrategyBijection& phi) {
  Json rows = Json::object();
  for (std::size_t i = 0; i < phi.row_map.size(); ++i) {
    rows[a.RowLabels()[i]] = b.RowLabels()[phi.row_map[i]];
  }
  Json cols = Json::object();
  for (std::size_t j = 0; j < phi.col_map.size(); ++j) {
    cols[a.ColLabels()[j]] = b.ColLabels()[phi.col_map[j]];
  }
  return {{"rows", rows}, {"cols", cols}};
}

Json ClassToJson(const ExtensionClass& cls) {
  Json out = {{"class", std::string(ClassName(cls.tag))}};
  if (cls.witness) {
    out["k"] = cls.witness->first;
    out["l"] = cls.witness->second;
  }
  return out;
}

int RunExtend(const std::string& game_file, const AngleArgs& angles,
              const std::string& label, const std::string& out_file, bool json,
              std::ostream& out) {
  const BimatrixGame game = ParseGame(ReadFile(game_file));
  const UnitaryParams params = angles.Parse();
  const ExtendedGame ext = BuildExtension(game, params, label);
  const std::string doc = ExtendedGameToJson(ext).dump(2) + "\n";
  if (!out_file.empty()) WriteFile(out_file, doc);
  if (json) {
    out << doc;
    return kExitOk;
  }
  const ExtensionClass cls = Classify(params);
  out << params.ToString() << "  class " << ClassName(cls.tag)
      << (ext.exact() ? "  exact" : "  float") << "\n";
  out << (ext.exact() ? FormatTable(*ext.exact_game) : FormatTable(ext.real_game));
  return kExitOk;
}

int RunClassify(const AngleArgs& angles, bool json, std::ostream& out) {
  const UnitaryParams params = angles.Parse();
  const ExtensionClass cls = Classify(params);
  if (json) {
    out << ClassToJson(cls).dump(2) << "\n";
    return kExitOk;
  }
  out << params.ToString() << ": " << ClassName(cls.tag);
  if (cls.witness) {
    out << " (k=" << cls.witness->first << ", l=" << cls.witness->second << ")";
  }
  out << "\n";
  return kExitOk;
}

int RunSolve(const std::string& game_file, bool allow_float, bool json,
             std::ostream& out) {
  const GameDocument doc = ParseGameDocument(ReadFile(game_file));
  if (!doc.exact) {
    if (!allow_float) {
      throw DomainError(
          "this game was evaluated in floating point; rerun with "
          "--allow-float-solve to solve it with tolerance 1e-9");
    }
    const RealGame real = doc.real_game ? *doc.real_game : ToReal(doc.game);
    const auto report = SupportEnumeration(real);
    out << (json ? ReportToJson(report, real).dump(2) + "\n"
                 : FormatReport(report, real));
    return kExitOk;
  }
  const auto report = SupportEnumeration(doc.game);
  out << (json ? ReportToJson(report, doc.game).dump(2) + "\n"
               : FormatReport(report, doc.game));
  return kExitOk;
}

int RunIsocheck(const std::string& file_a, const std::string& file_b,
                const AngleArgs& angles, bool with_params, bool json,
                std::ostream& out) {
  const BimatrixGame a = ParseGame(ReadFile(file_a));
  const BimatrixGame b = ParseGame(ReadFile(file_b));
  const auto phi = FindIsomorphism(a, b);
  Json doc;
  doc["isomorphic"] = phi.has_value();
  if (phi) doc["bijection"] = BijectionToJson(a, b, *phi);
  std::ostringstream text;
  text << (phi ? "isomorphic: " + DescribeBijection(a, b, *phi)
               : std::string("not isomorphic"))
       << "\n";

  if (with_params) {
    const UnitaryParams params = angles.Parse();
    Json invariance = Json::object();
    for (const auto* game : {&a, &b}) {
      if (game->NumRows() != 2 || game->NumCols() != 2) continue;
      const InvarianceVerdict verdict = EmpiricalInvariance(*game, params);
      const std::string name = game == &a ? "a" : "b";
      invariance[name] = {{"invariant", verdict.invariant},
                          {"generic_input", verdict.generic_input}};
      text << "extension of " << (game == &a ? file_a : file_b) << " by "
           << params.ToString() << ": "
           << (verdict.invariant ? "invariant" : "not invariant")
           << (verdict.generic_input ? "" : " (warning: input not generic)")
           << "\n";
    }
    doc["params"] = params.ToString();
    doc["class"] = std::string(ClassName(Classify(params).tag));
    doc["invariance"] = std::move(invariance);
    text << "classifier: " << ClassName(Classify(params).tag) << "\n";
  }
  out << (json ? doc.dump(2) + "\n" : text.str());
  return kExitOk;
}

int RunSweep(const std::string& game_file, const std::vector<std::string>& thetas,
             std::int64_t steps, bool allow_float, const std::string& out_file,
             std::ostream& out) {
  const BimatrixGame game = ParseGame(ReadFile(game_file));
  SweepOptions options;
  for (const auto& t : thetas) options.thetas.push_back(Angle::Parse(t));
  options.phase_steps = steps;
  options.allow_float_solve = allow_float;
  const std::string csv = SweepCsv(Sweep(game, options));
  if (out_file.empty()) {
    out << csv;
  } else {
    WriteFile(out_file, csv);
  }
  return kExitOk;
}

int RunVerifyOracle(std::size_t samples, std::uint64_t seed, std::size_t games,
                    bool json, std::ostream& out) {
  const OracleReport report = VerifyOracle(samples, seed, games);
  const bool pass = report.max_abs_deviation <= kOracleTolerance &&
                    report.max_norm_deviation <= kOracleTolerance;
  if (json) {
    Json doc = {{"samples", report.samples},
                {"games", report.games},
                {"seed", report.seed},
                {"max_abs_deviation", report.max_abs_deviation},
                {"max_norm_deviation", report.max_norm_deviation},
                {"tolerance", kOracleTolerance},
                {"pass", pass}};
    out << doc.dump(2) << "\n";
  } else {
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer),
                  "closed form vs statevector: %zu games x %zu samples, seed "
                  "%llu\nmax |payoff deviation| = %.3e\nmax |norm^2 - 1|       "
                  "= %.3e\n%s (tolerance %.0e)\n",
                  report.games, report.samples,
                  static_cast<unsigned long long>(report.seed),
                  report.max_abs_deviation, report.max_norm_deviation,
                  pass ? "PASS" : "FAIL", kOracleTolerance);
    out << buffer;
  }
  return pass ? kExitOk : kExitCheckFailed;
}

int RunReproduce(bool json, std::ostream& out) {
  const auto claims = RunReproduction();
  out << (json ? ClaimsToJson(claims).dump(2) + "\n" : FormatClaims(claims));
  return AllPass(claims) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Quantum EWL extensions of 2x2 bimatrix games", "ewlext"};
  app.require_subcommand(1, 1);

  bool json = false;
  bool allow_float = false;
  std::string game_file, game_b, out_file, label = "U";
  AngleArgs angles;
  std::vector<std::string> thetas = {"1/4pi", "1/2pi"};
  std::int64_t steps = 8;
  std::size_t samples = 1000, games = 5;
  std::uint64_t seed = 1;

  auto* extend = app.add_subcommand("extend", "extend a 2x2 game by U(theta, alpha, beta)");
  extend->add_option("game", game_file, "game JSON file")->required();
  angles.Register(extend, true);
  extend->add_option("--label", label, "label of the unitary strategy");
  extend->add_option("--out", out_file, "write the extended game JSON here");
  extend->add_flag("--json", json, "print JSON instead of a table");

  auto* classify = app.add_subcommand("classify", "classify U(theta, alpha, beta)");
  angles.Register(classify, true);
  classify->add_flag("--json", json, "print JSON");

  auto* solve = app.add_subcommand("solve", "all Nash equilibria of a game");
  solve->add_option("game", game_file, "game JSON file")->required();
  solve->add_flag("--allow-float-solve", allow_float,
                  "solve float-evaluated games with tolerance 1e-9");
  solve->add_flag("--json", json, "print the equilibrium report as JSON");

  auto* isocheck = app.add_subcommand("isocheck", "strong isomorphism test");
  isocheck->add_option("a", game_file, "first game JSON file")->required();
  isocheck->add_option("b", game_b, "second game JSON file")->required();
  angles.Register(isocheck, false);
  isocheck->add_flag("--json", json, "print JSON");

  auto* sweep = app.add_subcommand("sweep", "grid sweep to CSV");
  sweep->add_option("game", game_file, "2x2 game JSON file")->required();
  sweep->add_option("--theta", thetas, "theta values")->delimiter(',');
  sweep->add_option("--steps", steps, "alpha, beta in {2 pi k / steps}");
  sweep->add_flag("--allow-float-solve", allow_float,
                  "solve float-evaluated extensions too");
  sweep->add_option("--out", out_file, "CSV output file");

  auto* oracle = app.add_subcommand("verify-oracle",
                                    "closed-form payoff vs statevector simulation");
  oracle->add_option("--samples", samples, "strategy pairs per game");
  oracle->add_option("--seed", seed, "RNG seed");
  oracle->add_option("--games", games, "random games");
  oracle->add_flag("--json", json, "print JSON");

  auto* reproduce = app.add_subcommand("reproduce", "recompute the published results");
  reproduce->add_flag("--json", json, "print JSON");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformedInput;
  }

  try {
    if (extend->parsed()) return RunExtend(game_file, angles, label, out_file, json, out);
    if (classify->parsed()) return RunClassify(angles, json, out);
    if (solve->parsed()) return RunSolve(game_file, allow_float, json, out);
    if (isocheck->parsed()) {
      const bool with_params = isocheck->count("--theta") + isocheck->count("--alpha") +
                                   isocheck->count("--beta") > 0;
      return RunIsocheck(game_file, game_b, angles, with_params, json, out);
    }
    if (sweep->parsed()) {
      return RunSweep(game_file, thetas, steps, allow_float, out_file, out);
    }
    if (oracle->parsed()) return RunVerifyOracle(samples, seed, games, json, out);
    if (reproduce->parsed()) return RunReproduce(json, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformedInput;
  }
  return kExitMalformedInput;
}

}  // namespace ewlext::cli
