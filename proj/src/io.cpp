#include "oracle_games/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracle_games/errors.hpp"

namespace oracle_games {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OracleFamily family_from_name(const std::string& name) {
  if (name == "sqrt_k") return OracleFamily::sqrt_k;
  if (name == "sqrt_shift") return OracleFamily::sqrt_shift;
  if (name == "linear_slope") return OracleFamily::linear_slope;
  if (name == "constant_c") return OracleFamily::constant_c;
  if (name == "piecewise_linear") return OracleFamily::piecewise_linear;
  throw ParseError("unknown oracle family: " + name);
}

const char* family_name(OracleFamily f) {
  switch (f) {
    case OracleFamily::sqrt_k: return "sqrt_k";
    case OracleFamily::sqrt_shift: return "sqrt_shift";
    case OracleFamily::linear_slope: return "linear_slope";
    case OracleFamily::constant_c: return "constant_c";
    case OracleFamily::piecewise_linear: return "piecewise_linear";
  }
  return "?";
}

}  // namespace

GameSpec parse_game_spec(const std::string& text) {
  const json j = parse_json(text);
  if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].empty())
    throw ParseError("game file needs a non-empty \"matrix\" array");

  std::vector<std::vector<PayoffPair>> rows;
  for (const auto& row : j["matrix"]) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<PayoffPair> cells;
    for (const auto& cell : row) {
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number())
        throw ParseError("each matrix cell must be a [a, b] payoff pair");
      cells.push_back({cell[0].get<double>(), cell[1].get<double>()});
    }
    rows.push_back(std::move(cells));
  }

  std::vector<std::string> row_labels, col_labels;
  if (j.contains("row_labels")) row_labels = j["row_labels"].get<std::vector<std::string>>();
  if (j.contains("col_labels")) col_labels = j["col_labels"].get<std::vector<std::string>>();

  GameSpec spec = [&] {
    try {
      BimatrixGame base = BimatrixGame::from_rows(rows);
      return GameSpec{BimatrixGame(base.rows(), base.cols(), base.cells(),
                                   row_labels, col_labels),
                      GameClass::general};
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("invalid game matrix: ") + e.what());
    }
  }();

  if (j.contains("class")) {
    const std::string cls = j["class"].get<std::string>();
    if (cls == "strictly_competitive") {
      spec.declared = GameClass::strictly_competitive;
      if (!spec.game.is_strictly_competitive())
        throw ParseError("game declared strictly_competitive but payoffs disagree");
    } else if (cls != "general") {
      throw ParseError("unknown game class: " + cls);
    }
  }
  return spec;
}

std::string serialize_game_spec(const GameSpec& spec) {
  json j;
  json matrix = json::array();
  for (std::size_t i = 0; i < spec.game.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < spec.game.cols(); ++c)
      row.push_back({spec.game.at(i, c).a, spec.game.at(i, c).b});
    matrix.push_back(std::move(row));
  }
  j["matrix"] = std::move(matrix);
  if (!spec.game.row_labels().empty()) j["row_labels"] = spec.game.row_labels();
  if (!spec.game.col_labels().empty()) j["col_labels"] = spec.game.col_labels();
  j["class"] = spec.declared == GameClass::strictly_competitive ? "strictly_competitive"
                                                                : "general";
  return j.dump(2) + "\n";
}

OracleFunction parse_oracle_spec(const std::string& text) {
  const json j = parse_json(text);
  if (!j.contains("family")) throw ParseError("oracle file needs a \"family\" field");
  const OracleFamily fam = family_from_name(j["family"].get<std::string>());

  auto param = [&](std::size_t idx) {
    if (!j.contains("params") || !j["params"].is_array() || j["params"].size() <= idx)
      throw ParseError("oracle family needs a numeric parameter");
    return j["params"][idx].get<double>();
  };

  OracleFunction f = [&]() -> OracleFunction {
    try {
      switch (fam) {
        case OracleFamily::sqrt_k: return OracleFunction::sqrt_k(param(0));
        case OracleFamily::sqrt_shift: return OracleFunction::sqrt_shift(param(0));
        case OracleFamily::linear_slope: return OracleFunction::linear_slope(param(0));
        case OracleFamily::constant_c: return OracleFunction::constant_c(param(0));
        case OracleFamily::piecewise_linear: {
          if (!j.contains("points") || !j["points"].is_array())
            throw ParseError("piecewise_linear oracle needs a \"points\" array");
          std::vector<std::pair<double, double>> pts;
          for (const auto& p : j["points"]) {
            if (!p.is_array() || p.size() != 2)
              throw ParseError("each oracle point must be [x, I]");
            pts.emplace_back(p[0].get<double>(), p[1].get<double>());
          }
          return OracleFunction::piecewise_linear(std::move(pts));
        }
      }
      throw ParseError("unknown oracle family");
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("invalid oracle: ") + e.what());
    }
  }();

  try {
    if (j.contains("x_cap")) f = f.with_x_cap(j["x_cap"].get<double>());
    if (j.contains("shift")) f = f.with_shift(j["shift"].get<double>());
  } catch (const Error& e) {
    throw ParseError(std::string("invalid oracle: ") + e.what());
  }
  return f;
}

std::string serialize_oracle_spec(const OracleFunction& f) {
  json j;
  j["family"] = family_name(f.family());
  if (!f.params().empty()) j["params"] = f.params();
  if (f.family() == OracleFamily::piecewise_linear) {
    json pts = json::array();
    for (const auto& [x, y] : f.points()) pts.push_back({x, y});
    j["points"] = std::move(pts);
  }
  if (f.x_cap()) j["x_cap"] = *f.x_cap();
  if (f.shift() != 0.0) j["shift"] = f.shift();
  return j.dump(2) + "\n";
}

GameSpec load_game_spec(const std::filesystem::path& path) {
  try {
    return parse_game_spec(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

OracleFunction load_oracle_spec(const std::filesystem::path& path) {
  try {
    return parse_oracle_spec(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace oracle_games
