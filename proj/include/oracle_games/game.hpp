#pragma once

#include "oracle_games/types.hpp"

namespace oracle_games {

/// A's best-response row per column.  Ties are allowed only between cells with
/// identical payoff pairs (the lowest row index wins); any other tie throws
/// AmbiguousBestResponse because the maximal matrix would be ill-defined.
BestResponseMap best_response_indices(const BimatrixGame& game);

/// Maximal matrix R: every row identical, cell (i, j) copied from the game's
/// cell at (alpha[j], j).  Payoffs when the oracle responds.
BimatrixGame maximal_matrix(const BimatrixGame& game);

/// Cell-wise blend M * (1 - i_val) + R * i_val for both players.
BimatrixGame cross_section(const BimatrixGame& m, const BimatrixGame& r,
                           double i_val);

/// Bilinear expectation (s_a^T A s_b, s_a^T B s_b).
PayoffPair expected_payoffs(const BimatrixGame& game, const MixedStrategy& s_a,
                            const MixedStrategy& s_b);

/// E_r: A's expected payoff against s_b when the oracle responds.  r must be a
/// maximal matrix (identical rows, checked to 1e-12).
double response_payoff(const BimatrixGame& r, const MixedStrategy& s_b);

/// V = E_r(s_b) - E_n(s_a, s_b): marginal gain in A's payoff per unit of
/// response probability.  Mathematically >= 0 for every (s_a, s_b); a value
/// below -1e-9 signals numerical corruption and throws InternalError.
double value_of_information(const BimatrixGame& m, const BimatrixGame& r,
                            const MixedStrategy& s_a, const MixedStrategy& s_b);

/// A component: E_n*(1-I) + E_r*I - x.  B component: the same blend of B's
/// expectations in M and R, with no payment term.
PayoffPair full_payoff(const BimatrixGame& m, const BimatrixGame& r,
                       const MixedStrategy& s_a, const MixedStrategy& s_b,
                       double i_val, double x);

}  // namespace oracle_games
