#include "oracle_games/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "oracle_games/errors.hpp"
#include "oracle_games/game.hpp"

namespace oracle_games {

namespace {

constexpr double kHTol = 1e-12;
constexpr double kVTol = 1e-12;

// h(x) = V * I'(x) - 1: A's marginal net benefit of paying more.  V ~ 0 short
// circuits to -1 so that a flat value never multiplies an infinite slope.
double h_value(double v, const OracleFunction& f, double x, DerivSide side) {
  if (v <= kVTol) return -1.0;
  const double d = f.derivative(x, side);
  if (std::isinf(d)) return std::numeric_limits<double>::infinity();
  return v * d - 1.0;
}

struct Candidate {
  EqCase kind = EqCase::interior_zero;
  double x = 0.0;
  double i_val = 0.0;
  std::size_t interval = 0;  // interval index (for node_mix, the one above)
  double mult_lo = 0.0;
  double mult_hi = 0.0;
};

OracleEquilibrium finalize(const BimatrixGame& m, const BimatrixGame& r,
                           const OracleFunction& f, MixedStrategy s_a,
                           MixedStrategy s_b, const Candidate& c) {
  OracleEquilibrium eq;
  eq.s_a = std::move(s_a);
  eq.s_b = std::move(s_b);
  eq.x = c.x;
  eq.i_val = f.eval(c.x);
  eq.case_label = c.kind;
  eq.x_multiplicity_lo = c.mult_lo;
  eq.x_multiplicity_hi = c.mult_hi;
  eq.v_at_eq = value_of_information(m, r, eq.s_a, eq.s_b);
  const PayoffPair p = full_payoff(m, r, eq.s_a, eq.s_b, eq.i_val, eq.x);
  eq.e_a = p.a;
  eq.e_b = p.b;
  return eq;
}

// Equilibrium at x = 0 with I(0) >= 1: the game is the maximal matrix from
// the start.  B picks the best column of R; A plays the matching best
// response (all rows of R tie, so the base game's response row is used).
OracleEquilibrium solve_always_responds(const BimatrixGame& m) {
  const BimatrixGame r = maximal_matrix(m);
  std::size_t best_j = 0;
  for (std::size_t j = 1; j < r.cols(); ++j)
    if (r.at(0, j).b > r.at(0, best_j).b) best_j = j;
  const BestResponseMap br = best_response_indices(m);
  OracleEquilibrium eq;
  eq.s_a = MixedStrategy::pure(m.rows(), br.alpha[best_j]);
  eq.s_b = MixedStrategy::pure(m.cols(), best_j);
  eq.x = 0.0;
  eq.i_val = 1.0;
  eq.case_label = EqCase::saturated_full_info;
  eq.v_at_eq = value_of_information(m, r, eq.s_a, eq.s_b);
  const PayoffPair p = full_payoff(m, r, eq.s_a, eq.s_b, 1.0, 0.0);
  eq.e_a = p.a;
  eq.e_b = p.b;
  return eq;
}

}  // namespace

const char* to_string(EqCase c) {
  switch (c) {
    case EqCase::interior_zero: return "interior_zero";
    case EqCase::interval_interior: return "interval_interior";
    case EqCase::node_mix: return "node_mix";
    case EqCase::saturated_full_info: return "saturated_full_info";
    case EqCase::pure_base: return "pure_base";
  }
  return "?";
}

GameAnalysis analyze_game(const BimatrixGame& m, std::size_t grid) {
  GameAnalysis ga{m, maximal_matrix(m), {}, {}, {}};
  ga.base = solve_cross_section(m);
  ga.nodes = find_nodes(ga.m, ga.r, nullptr, grid);
  ga.intervals = interval_profile(ga.m, ga.r, ga.nodes);
  return ga;
}

std::pair<double, MixedStrategy> node_mixture(double v_below, double v_above,
                                              double i_slope_at_node,
                                              const MixedStrategy& s_below,
                                              const MixedStrategy& s_above) {
  const double target = std::isinf(i_slope_at_node) ? 0.0 : 1.0 / i_slope_at_node;
  const double lo = std::min(v_below, v_above), hi = std::max(v_below, v_above);
  if (target < lo - 1e-9 || target > hi + 1e-9)
    throw NoMixExists("1/I' does not lie between the adjacent interval values");
  double p;
  if (std::abs(v_below - v_above) < 1e-12) {
    p = 1.0;  // degenerate: any mix works; report the below-side strategy
  } else {
    p = (target - v_above) / (v_below - v_above);
    p = std::clamp(p, 0.0, 1.0);
  }
  return {p, s_below.mix(p, s_above)};
}

OracleEquilibrium solve_oracle_game(const BimatrixGame& m, const OracleFunction& f,
                                    const GameAnalysis* analysis, std::size_t grid) {
  // Pure base equilibria survive any oracle; report the first one at x = 0.
  const auto pures = pure_equilibria(m);
  if (!pures.empty()) {
    const auto [i, j] = pures.front();
    const BimatrixGame r = maximal_matrix(m);
    Candidate c;
    c.kind = EqCase::pure_base;
    c.x = 0.0;
    return finalize(m, r, f, MixedStrategy::pure(m.rows(), i),
                    MixedStrategy::pure(m.cols(), j), c);
  }

  // Oracles answering with positive probability for free: rewrite as an
  // equivalent normalized game, solve, and restate in original terms.
  const double i0 = f.eval(0.0);
  if (i0 >= 1.0 - 1e-12) return solve_always_responds(m);
  if (i0 > 1e-12) {
    const auto [shifted_m, shifted_f] = shift_to_zero(m, f);
    OracleEquilibrium eq = solve_oracle_game(shifted_m, shifted_f, nullptr, grid);
    const BimatrixGame r = maximal_matrix(m);
    eq.i_val = f.eval(eq.x);
    eq.v_at_eq = value_of_information(m, r, eq.s_a, eq.s_b);
    const PayoffPair p = full_payoff(m, r, eq.s_a, eq.s_b, eq.i_val, eq.x);
    eq.e_a = p.a;
    eq.e_b = p.b;
    return eq;
  }

  std::optional<GameAnalysis> local;
  if (!analysis) {
    // Surface base-game multiplicity before interval analysis, which would
    // otherwise fail with the less actionable NonUniqueInterior.
    if (solve_cross_section(m).profiles.size() > 1)
      throw MultipleBaseEquilibria("base game has several equilibria; use solve_multi");
    local.emplace(analyze_game(m, grid));
    analysis = &*local;
  }
  const BimatrixGame& r = analysis->r;
  const auto& iv = analysis->intervals;
  if (analysis->base.profiles.size() > 1)
    throw MultipleBaseEquilibria("base game has several equilibria; use solve_multi");
  if (iv.empty()) throw InternalError("no intervals in game analysis");

  const double sup = f.sup_value();

  // Scan intervals in increasing I for sign changes of h.
  std::vector<Candidate> cands;
  auto push = [&cands](Candidate c) {
    for (const Candidate& o : cands)
      if (std::abs(o.x - c.x) <= 1e-9) return;
    cands.push_back(c);
  };

  double x_lo = 0.0;
  for (std::size_t k = 0; k < iv.size(); ++k) {
    if (k > 0 && iv[k].i_lo >= sup - 1e-12) break;  // oracle cannot reach it
    const double v = iv[k].v;
    const bool last_reachable = iv[k].i_hi >= sup - 1e-12;
    const double x_hi = last_reachable ? f.saturation_x() : f.level_x(iv[k].i_hi);

    const double h_lo = h_value(v, f, x_lo, DerivSide::right);
    if (h_lo <= kHTol) {
      if (k == 0) {
        push({EqCase::interior_zero, 0.0, 0.0, 0, 0.0, 0.0});
      } else {
        const double h_before =
            h_value(iv[k - 1].v, f, x_lo, DerivSide::left);
        if (h_before > kHTol)
          push({EqCase::node_mix, x_lo, iv[k].i_lo, k, x_lo, x_lo});
        else
          // h already crossed inside the previous interval structure; treat
          // the node payment itself as the interior solution point.
          push({EqCase::interval_interior, x_lo, iv[k].i_lo, k, x_lo, x_lo});
      }
    } else {
      const double h_hi = h_value(v, f, x_hi, DerivSide::left);
      if (h_hi > kHTol) {
        if (last_reachable)
          push({EqCase::saturated_full_info, x_hi, std::min(sup, iv[k].i_hi), k, x_hi,
                x_hi});
        // else: h stays positive through this interval; move on.
      } else {
        // Crossing strictly inside (x_lo, x_hi): invert the slope.
        Candidate c;
        c.kind = EqCase::interval_interior;
        c.interval = k;
        try {
          const SlopeInterval si = f.slope_x(1.0 / v);
          c.mult_lo = std::clamp(si.lo, x_lo, x_hi);
          c.mult_hi = std::clamp(si.hi, x_lo, x_hi);
          c.x = c.mult_lo;
        } catch (const SlopeOutOfRange& e) {
          // Derivative jumps past 1/v at a kink; pay exactly the kink.
          c.x = std::clamp(e.fallback_x(), x_lo, x_hi);
          c.mult_lo = c.mult_hi = c.x;
        }
        c.i_val = f.eval(c.x);
        push(c);
      }
    }
    if (last_reachable) break;
    x_lo = x_hi;
  }

  if (cands.empty())
    throw InternalError("interval walk produced no equilibrium candidate");

  bool v_monotone = true;
  for (std::size_t k = 0; k + 1 < iv.size(); ++k)
    if (iv[k + 1].v > iv[k].v + 1e-9) v_monotone = false;
  if (!v_monotone && cands.size() > 1)
    throw NonMonotoneValue("value of information increases across a node and multiple equilibrium candidates exist");

  const Candidate& c = cands.front();
  switch (c.kind) {
    case EqCase::interior_zero: {
      const auto& [sa, sb] = analysis->base.profiles.front();
      return finalize(m, r, f, sa, sb, c);
    }
    case EqCase::interval_interior: {
      const IntervalAnalysis& in = iv[c.interval];
      const MixedStrategy sa = s_a_at(m, r, in, c.i_val);
      return finalize(m, r, f, sa, in.s_b, c);
    }
    case EqCase::node_mix: {
      const IntervalAnalysis& below = iv[c.interval - 1];
      const IntervalAnalysis& above = iv[c.interval];
      const double slope = f.derivative(c.x, DerivSide::right);
      const auto [p, beta] = node_mixture(below.v, above.v, slope, below.s_b, above.s_b);
      (void)p;
      const MixedStrategy sa = s_a_at(m, r, below, c.i_val);
      return finalize(m, r, f, sa, beta, c);
    }
    case EqCase::saturated_full_info: {
      const IntervalAnalysis& in = iv[c.interval];
      const MixedStrategy sa = s_a_at(m, r, in, std::min(c.i_val, 1.0));
      return finalize(m, r, f, sa, in.s_b, c);
    }
    case EqCase::pure_base:
      break;  // handled before the walk
  }
  throw InternalError("unreachable solver case");
}

std::vector<OracleEquilibrium> solve_multi(
    const BimatrixGame& m, const OracleFunction& f,
    const std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>&
        subsupports) {
  std::vector<OracleEquilibrium> out;
  for (std::size_t s = 0; s < subsupports.size(); ++s) {
    const auto& [rows, cols] = subsupports[s];
    try {
      const BimatrixGame sub = m.submatrix(rows, cols);
      OracleEquilibrium eq = [&] {
        try {
          return solve_oracle_game(sub, f);
        } catch (const MultipleBaseEquilibria&) {
          // The restriction itself is ambiguous; honor it by selecting the
          // base equilibrium supported on the whole subgame, valid at x = 0
          // when paying has no positive marginal value there.
          const EquilibriumSet base = solve_cross_section(sub);
          const BimatrixGame r = maximal_matrix(sub);
          std::optional<std::pair<MixedStrategy, MixedStrategy>> full;
          for (const auto& prof : base.profiles) {
            if (prof.first.support().size() == sub.rows() &&
                prof.second.support().size() == sub.cols()) {
              if (full) throw;  // several full-support equilibria: still ambiguous
              full = prof;
            }
          }
          if (!full) throw;
          const double v = value_of_information(sub, r, full->first, full->second);
          if (h_value(v, f, 0.0, DerivSide::right) > kHTol) throw;
          Candidate c;
          c.kind = EqCase::interior_zero;
          return finalize(sub, r, f, full->first, full->second, c);
        }
      }();
      std::vector<double> sa(m.rows(), 0.0), sb(m.cols(), 0.0);
      for (std::size_t i = 0; i < rows.size(); ++i) sa[rows[i]] = eq.s_a[i];
      for (std::size_t j = 0; j < cols.size(); ++j) sb[cols[j]] = eq.s_b[j];
      eq.s_a = MixedStrategy(sa);
      eq.s_b = MixedStrategy(sb);
      out.push_back(std::move(eq));
    } catch (const Error& e) {
      throw Error("subgame " + std::to_string(s) + ": " + e.what());
    }
  }
  return out;
}

std::vector<std::pair<double, OracleEquilibrium>> harmful_info_profile(
    const BimatrixGame& m, const std::function<OracleFunction(double)>& family,
    const std::vector<double>& k_grid, std::size_t grid) {
  if (k_grid.empty()) throw EmptyInput("empty parameter grid");
  const GameAnalysis ga = analyze_game(m, grid);
  std::vector<std::pair<double, OracleEquilibrium>> out;
  out.reserve(k_grid.size());
  for (double k : k_grid) out.emplace_back(k, solve_oracle_game(m, family(k), &ga, grid));
  return out;
}

}  // namespace oracle_games
