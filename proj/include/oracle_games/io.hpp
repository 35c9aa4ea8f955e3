#pragma once

#include <filesystem>
#include <string>

#include "oracle_games/oracle_fn.hpp"
#include "oracle_games/types.hpp"

namespace oracle_games {

enum class GameClass { general, strictly_competitive };

struct GameSpec {
  BimatrixGame game;
  GameClass declared = GameClass::general;
};

/// JSON game file: {"matrix": [[[a,b], ...] per row], "row_labels": [...],
/// "col_labels": [...], "class": "general"|"strictly_competitive"}.
/// A declared strictly_competitive class is validated against the payoffs.
GameSpec parse_game_spec(const std::string& text);
std::string serialize_game_spec(const GameSpec& spec);

/// JSON oracle file: {"family": name, "params": [...], "points": [[x,y],...],
/// "x_cap": number, "shift": number}; params/points per family.
OracleFunction parse_oracle_spec(const std::string& text);
std::string serialize_oracle_spec(const OracleFunction& f);

GameSpec load_game_spec(const std::filesystem::path& path);
OracleFunction load_oracle_spec(const std::filesystem::path& path);

/// Locale-independent %.12g formatting used in all CSV output.
std::string format_number(double v);

}  // namespace oracle_games
