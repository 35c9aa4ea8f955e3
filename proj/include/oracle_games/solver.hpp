#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "oracle_games/nash.hpp"
#include "oracle_games/nodes.hpp"
#include "oracle_games/oracle_fn.hpp"
#include "oracle_games/types.hpp"

namespace oracle_games {

enum class EqCase {
  interior_zero,        // paying nothing is already optimal
  interval_interior,    // marginal value of payment balances inside an interval
  node_mix,             // B mixes adjacent-interval strategies at a node
  saturated_full_info,  // paying up to the oracle's saturation point
  pure_base             // base game has a pure equilibrium; oracle irrelevant
};

const char* to_string(EqCase c);

struct OracleEquilibrium {
  MixedStrategy s_a;
  MixedStrategy s_b;
  double x = 0.0;      // payment to the oracle
  double i_val = 0.0;  // response probability at x
  EqCase case_label = EqCase::interior_zero;
  double e_a = 0.0;  // A's expected payoff net of payment
  double e_b = 0.0;
  double v_at_eq = 0.0;
  /// Payments achieving the same equilibrium; non-degenerate only when the
  /// oracle's derivative is constant at the solution.
  double x_multiplicity_lo = 0.0;
  double x_multiplicity_hi = 0.0;
};

/// Oracle-independent structure of a game: maximal matrix, base equilibria,
/// node events in I-space, and per-interval analyses.  Reusable across many
/// oracle functions over the same game.
struct GameAnalysis {
  BimatrixGame m;
  BimatrixGame r;
  EquilibriumSet base;
  std::vector<NodeEvent> nodes;
  std::vector<IntervalAnalysis> intervals;
};

GameAnalysis analyze_game(const BimatrixGame& m, std::size_t grid = 1024);

/// Mixing weight p and mixture beta = p*s_below + (1-p)*s_above such that
/// p*v_below + (1-p)*v_above = 1/i_slope_at_node.  Throws NoMixExists when
/// 1/slope lies outside [min(v), max(v)].
std::pair<double, MixedStrategy> node_mixture(double v_below, double v_above,
                                              double i_slope_at_node,
                                              const MixedStrategy& s_below,
                                              const MixedStrategy& s_above);

/// Full equilibrium of the oracle game (m, f).  Pass a precomputed analysis
/// to amortize node finding across solves with different oracles; it must
/// come from analyze_game(m).
OracleEquilibrium solve_oracle_game(const BimatrixGame& m, const OracleFunction& f,
                                    const GameAnalysis* analysis = nullptr,
                                    std::size_t grid = 1024);

/// Solves each restricted subgame (row set x column set) independently and
/// re-embeds the strategies at full length.  Makes no completeness claim
/// about equilibria of the unrestricted game.
std::vector<OracleEquilibrium> solve_multi(
    const BimatrixGame& m, const OracleFunction& f,
    const std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>&
        subsupports);

/// E_a(k) profile over a parametrized oracle family; analysis is computed
/// once and shared across the grid.
std::vector<std::pair<double, OracleEquilibrium>> harmful_info_profile(
    const BimatrixGame& m, const std::function<OracleFunction(double)>& family,
    const std::vector<double>& k_grid, std::size_t grid = 1024);

}  // namespace oracle_games
