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

#include "ewlext/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ewlext {
namespace {

constexpr double kSnapTolerance = 1e-12;
constexpr std::int64_t kSnapMaxDenominator = 1000;

// Shortest form that reads back to the same double.
std::string RoundTripCell(double x) {
  char buffer[40];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, result.ptr);
}

std::string FloatCell(double x) {
  if (const auto r = Rational::Approximate(x, kSnapTolerance,
                                           kSnapMaxDenominator)) {
    return r->ToString();
  }
  return RoundTripCell(x);
}

Rational ParsePayoff(const Json& value) {
  if (value.is_string()) {
    try {
      return Rational::Parse(value.get<std::string>());
    } catch (const std::exception& e) {
      throw FormatError(e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  throw FormatError("payoff entries must be strings such as \"3\" or \"1/2\"");
}

double ParseRoundTripCell(const Json& value) {
  if (!value.is_string()) throw FormatError("float payoffs must be strings");
  const std::string text = value.get<std::string>();
  double x = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(x)) {
    throw FormatError("bad float payoff \"" + text + "\"");
  }
  return x;
}

// "float_payoffs" must have the same shape as the exact-parsed grid.
RealGame RealGameFromJson(const Json& grid, const BimatrixGame& shape) {
  if (!grid.is_array() || grid.size() != shape.NumRows()) {
    throw FormatError("\"float_payoffs\" does not match \"payoffs\"");
  }
  RealGame::Grid cells(shape.NumRows());
  for (std::size_t i = 0; i < shape.NumRows(); ++i) {
    if (!grid[i].is_array() || grid[i].size() != shape.NumCols()) {
      throw FormatError("\"float_payoffs\" does not match \"payoffs\"");
    }
    for (const auto& cell : grid[i]) {
      if (!cell.is_array() || cell.size() != 2) {
        throw FormatError("float payoff cells must be pairs");
      }
      cells[i].push_back({ParseRoundTripCell(cell[0]), ParseRoundTripCell(cell[1])});
    }
  }
  return RealGame(shape.RowLabels(), shape.ColLabels(), std::move(cells));
}

std::vector<std::string> ParseLabels(const Json& json, const char* key) {
  if (!json.contains(key) || !json[key].is_array()) {
    throw FormatError(std::string("missing array \"") + key + "\"");
  }
  std::vector<std::string> labels;
  for (const auto& label : json[key]) {
    if (!label.is_string()) throw FormatError("strategy labels must be strings");
    labels.push_back(label.get<std::string>());
  }
  return labels;
}

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
Json ProbabilitiesToJson(const std::vector<T>& probs) {
  Json out = Json::array();
  for (const T& p : probs) out.push_back(ScalarTraits<T>::Format(p));
  return out;
}

template <typename T>
Json ReportToJsonImpl(const EquilibriumReport<T>& report, const Game<T>& game) {
  using Traits = ScalarTraits<T>;
  Json pure = Json::array();
  for (const auto& eq : report.pure) {
    pure.push_back({{"row", game.RowLabels()[eq.row]},
                    {"col", game.ColLabels()[eq.col]},
                    {"payoff", {Traits::Format(eq.payoff.p1),
                                Traits::Format(eq.payoff.p2)}}});
  }
  Json mixed = Json::array();
  for (const auto& eq : report.mixed) {
    mixed.push_back({{"p1", ProbabilitiesToJson(eq.profile.p1)},
                     {"p2", ProbabilitiesToJson(eq.profile.p2)},
                     {"payoff", {Traits::Format(eq.payoff.p1),
                                 Traits::Format(eq.payoff.p2)}}});
  }
  Json out;
  out["pure"] = std::move(pure);
  out["mixed"] = std::move(mixed);
  out["degenerate"] = report.degenerate;
  return out;
}

template <typename T>
std::string Join(const std::vector<T>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += ScalarTraits<T>::Format(values[i]);
  }
  return out + ")";
}

template <typename T>
std::string FormatReportImpl(const EquilibriumReport<T>& report,
                             const Game<T>& game) {
  using Traits = ScalarTraits<T>;
  std::ostringstream os;
  os << "pure equilibria: " << report.pure.size() << "\n";
  for (const auto& eq : report.pure) {
    os << "  (" << game.RowLabels()[eq.row] << ", "
       << game.ColLabels()[eq.col] << ")  payoff ("
       << Traits::Format(eq.payoff.p1) << ", " << Traits::Format(eq.payoff.p2)
       << ")\n";
  }
  os << "mixed equilibria: " << report.mixed.size() << "\n";
  for (const auto& eq : report.mixed) {
    os << "  (" << Join(eq.profile.p1) << ", " << Join(eq.profile.p2)
       << ")  payoff (" << Traits::Format(eq.payoff.p1) << ", "
       << Traits::Format(eq.payoff.p2) << ")\n";
  }
  if (report.degenerate) {
    os << "warning: degenerate game, a continuum of equilibria exists; only "
          "vertices are listed\n";
  }
  return os.str();
}

}  // namespace

Json GameToJson(const BimatrixGame& game) {
  Json payoffs = Json::array();
  for (const auto& row : game.Payoffs()) {
    Json cells = Json::array();
    for (const auto& cell : row) {
      cells.push_back({cell.p1.ToString(), cell.p2.ToString()});
    }
    payoffs.push_back(std::move(cells));
  }
  Json out;
  out["rows"] = game.RowLabels();
  out["cols"] = game.ColLabels();
  out["payoffs"] = std::move(payoffs);
  return out;
}

BimatrixGame GameFromJson(const Json& json) {
  if (!json.is_object()) throw FormatError("a game must be a JSON object");
  auto rows = ParseLabels(json, "rows");
  auto cols = ParseLabels(json, "cols");
  if (!json.contains("payoffs") || !json["payoffs"].is_array()) {
    throw FormatError("missing array \"payoffs\"");
  }
  BimatrixGame::Grid grid;
  for (const auto& row : json["payoffs"]) {
    if (!row.is_array()) throw FormatError("payoff rows must be arrays");
    std::vector<PayoffPair> cells;
    for (const auto& cell : row) {
      if (!cell.is_array() || cell.size() != 2) {
        throw FormatError("each payoff cell must be a pair [p1, p2]");
      }
      cells.push_back({ParsePayoff(cell[0]), ParsePayoff(cell[1])});
    }
    grid.push_back(std::move(cells));
  }
  return MakeGame(std::move(rows), std::move(cols), std::move(grid));
}

BimatrixGame ParseGame(const std::string& text) {
  return GameFromJson(ParseJson(text));
}

GameDocument ParseGameDocument(const std::string& text) {
  const Json json = ParseJson(text);
  bool exact = true;
  if (json.is_object() && json.contains("exact")) {
    if (!json["exact"].is_boolean()) throw FormatError("\"exact\" must be a bool");
    exact = json["exact"].get<bool>();
  }
  GameDocument doc{GameFromJson(json), exact, std::nullopt};
  if (!exact && json.contains("float_payoffs")) {
    doc.real_game = RealGameFromJson(json["float_payoffs"], doc.game);
  }
  return doc;
}

Json ExtendedGameToJson(const ExtendedGame& ext) {
  Json out;
  if (ext.exact()) {
    out = GameToJson(*ext.exact_game);
  } else {
    const RealGame& g = ext.real_game;
    auto grid = [&](std::string (*format)(double)) {
      Json payoffs = Json::array();
      for (const auto& row : g.Payoffs()) {
        Json cells = Json::array();
        for (const auto& cell : row) {
          cells.push_back({format(cell.p1), format(cell.p2)});
        }
        payoffs.push_back(std::move(cells));
      }
      return payoffs;
    };
    out["rows"] = g.RowLabels();
    out["cols"] = g.ColLabels();
    out["payoffs"] = grid(FloatCell);
    out["float_payoffs"] = grid(RoundTripCell);
  }
  out["params"] = {{"theta", ext.params.theta().ToString()},
                   {"alpha", ext.params.alpha().ToString()},
                   {"beta", ext.params.beta().ToString()}};
  out["class"] = std::string(ClassName(Classify(ext.params).tag));
  out["exact"] = ext.exact();
  return out;
}

Json ReportToJson(const EquilibriumReport<Rational>& report,
                  const BimatrixGame& game) {
  return ReportToJsonImpl(report, game);
}

Json ReportToJson(const EquilibriumReport<double>& report,
                  const RealGame& game) {
  return ReportToJsonImpl(report, game);
}

template <typename T>
std::string FormatTable(const Game<T>& game) {
  using Traits = ScalarTraits<T>;
  std::vector<std::vector<std::string>> cells(game.NumRows());
  std::size_t width = 0;
  for (const auto& label : game.ColLabels()) width = std::max(width, label.size());
  for (std::size_t i = 0; i < game.NumRows(); ++i) {
    for (std::size_t j = 0; j < game.NumCols(); ++j) {
      const auto& p = game.At(i, j);
      cells[i].push_back("(" + Traits::Format(p.p1) + ", " +
                         Traits::Format(p.p2) + ")");
      width = std::max(width, cells[i].back().size());
    }
  }
  std::size_t label_width = 0;
  for (const auto& label : game.RowLabels())
    label_width = std::max(label_width, label.size());

  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  auto line = [&](const std::string& head, const std::vector<std::string>& row) {
    std::string out = pad(head, label_width);
    for (const auto& cell : row) out += "  " + pad(cell, width);
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = line("", game.ColLabels());
  for (std::size_t i = 0; i < game.NumRows(); ++i) {
    out += line(game.RowLabels()[i], cells[i]);
  }
  return out;
}

template std::string FormatTable(const BimatrixGame&);
template std::string FormatTable(const RealGame&);

std::string FormatReport(const EquilibriumReport<Rational>& report,
                         const BimatrixGame& game) {
  return FormatReportImpl(report, game);
}

std::string FormatReport(const EquilibriumReport<double>& report,
                         const RealGame& game) {
  return FormatReportImpl(report, game);
}

}  // namespace ewlext
