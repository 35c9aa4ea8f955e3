#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "oracle_games/types.hpp"

namespace oracle_games {

enum class DominanceStatus { undominated, weakly_dominated, strictly_dominated };

struct DominanceReport {
  Player player = Player::B;
  std::size_t strategy = 0;
  DominanceStatus status = DominanceStatus::undominated;
  /// Dominating mixture over the player's remaining strategies, embedded at
  /// full length with zero weight on `strategy`.
  MixedStrategy witness;
  /// Minimum payoff gap the witness achieves across the opponent's pure
  /// strategies (the maximin value when undominated).
  double margin = 0.0;
};

/// Maximin dominance gap only: max over mixtures of the player's other
/// strategies of the minimum payoff advantage over `strategy`.  Positive
/// margins mean dominated.  Cheap path for node scans.
double dominance_margin(const BimatrixGame& game, Player player, std::size_t strategy);

DominanceReport dominance_status(const BimatrixGame& game, Player player,
                                 std::size_t strategy);

struct EquilibriumSet {
  std::vector<std::pair<MixedStrategy, MixedStrategy>> profiles;  // (s_a, s_b)
  bool unique = false;
};

/// All Nash equilibria of the fixed bimatrix game found by support
/// enumeration over equal-size supports.  Profiles within 1e-8 are merged.
EquilibriumSet solve_cross_section(const BimatrixGame& game);

/// Cells that are simultaneously a column-best for A and a row-best for B
/// (weak inequalities, tolerance 1e-12).
std::vector<std::pair<std::size_t, std::size_t>> pure_equilibria(const BimatrixGame& game);

}  // namespace oracle_games
