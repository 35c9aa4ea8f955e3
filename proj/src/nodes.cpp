#include "oracle_games/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oracle_games/errors.hpp"
#include "oracle_games/game.hpp"

namespace oracle_games {

namespace {

constexpr double kBisectTol = 1e-10;

double margin_at(const BimatrixGame& m, const BimatrixGame& r, std::size_t strategy,
                 double i_val) {
  return dominance_margin(cross_section(m, r, i_val), Player::B, strategy);
}

int margin_sign(double v) {
  if (v > 1e-12) return 1;
  if (v < -1e-12) return -1;
  return 0;
}

std::pair<MixedStrategy, MixedStrategy> pick_by_s_b(const EquilibriumSet& eqs,
                                                    const MixedStrategy& target_s_b) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < eqs.profiles.size(); ++k) {
    const double d = eqs.profiles[k].second.max_abs_diff(target_s_b);
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  return eqs.profiles[best];
}

}  // namespace

std::vector<NodeEvent> find_nodes(const BimatrixGame& m, const BimatrixGame& r,
                                  const OracleFunction* oracle, std::size_t grid) {
  if (grid < 2) throw EmptyInput("node scan needs at least 2 grid cells");
  std::vector<NodeEvent> events;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<NodeEvent> mine;
    // Track the last grid point with a nonzero margin sign so that a node
    // landing exactly on a grid point (margin 0 there) is still bracketed.
    double prev_i = 0.0;
    double prev_m = margin_at(m, r, j, 0.0);
    for (std::size_t g = 1; g <= grid; ++g) {
      const double cur_i = static_cast<double>(g) / static_cast<double>(grid);
      const double cur_m = margin_at(m, r, j, cur_i);
      if (margin_sign(cur_m) == 0) continue;
      if (margin_sign(prev_m) * margin_sign(cur_m) < 0) {
        double lo = prev_i, hi = cur_i, mlo = prev_m;
        while (hi - lo > kBisectTol) {
          const double mid = 0.5 * (lo + hi);
          const double mm = margin_at(m, r, j, mid);
          if (margin_sign(mm) == 0 || margin_sign(mm) == margin_sign(mlo)) {
            lo = mid;
            if (margin_sign(mm) != 0) mlo = mm;
          } else {
            hi = mid;
          }
        }
        NodeEvent ev;
        ev.i_star = 0.5 * (lo + hi);
        ev.strategy = j;
        ev.direction = prev_m < 0.0 ? NodeDirection::becomes_dominated
                                    : NodeDirection::becomes_undominated;
        const double eps = 1e-6;
        const double side = ev.direction == NodeDirection::becomes_dominated
                                ? std::min(1.0, ev.i_star + eps)
                                : std::max(0.0, ev.i_star - eps);
        ev.witness = dominance_status(cross_section(m, r, side), Player::B, j).witness;
        ev.x_star = std::numeric_limits<double>::quiet_NaN();
        if (oracle) {
          try {
            ev.x_star = oracle->level_x(ev.i_star);
          } catch (const LevelUnreachable&) {
          }
        }
        mine.push_back(std::move(ev));
      }
      prev_i = cur_i;
      prev_m = cur_m;
    }
    if (mine.size() > 2)
      throw InconsistentDominance("dominance margin of a strategy changes sign more than twice");
    if (mine.size() == 2 &&
        !(mine[0].direction == NodeDirection::becomes_undominated &&
          mine[1].direction == NodeDirection::becomes_dominated))
      throw InconsistentDominance("two nodes of one strategy must run undominated-then-dominated");
    for (auto& ev : mine) events.push_back(std::move(ev));
  }
  std::sort(events.begin(), events.end(),
            [](const NodeEvent& l, const NodeEvent& r2) { return l.i_star < r2.i_star; });
  return events;
}

std::vector<IntervalAnalysis> interval_profile(const BimatrixGame& m,
                                               const BimatrixGame& r,
                                               const std::vector<NodeEvent>& nodes) {
  std::vector<double> bounds{0.0};
  for (const auto& ev : nodes) bounds.push_back(ev.i_star);
  bounds.push_back(1.0);

  std::vector<IntervalAnalysis> out;
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    const double lo = bounds[k], hi = bounds[k + 1];
    if (hi - lo < 1e-9) continue;

    IntervalAnalysis ia;
    ia.i_lo = lo;
    ia.i_hi = hi;
    const double w = hi - lo;
    const double i_mid = lo + 0.5 * w;
    const double i_1 = lo + 0.35 * w;
    const double i_2 = lo + 0.65 * w;

    const EquilibriumSet mid = solve_cross_section(cross_section(m, r, i_mid));
    for (const auto& [sa, sb] : mid.profiles)
      if (sb.max_abs_diff(mid.profiles.front().second) > 1e-7)
        throw NonUniqueInterior("cross-section equilibria disagree on s_b inside an interval");
    ia.s_a_unique = mid.unique;
    const auto& [sa_mid, sb_mid] = mid.profiles.front();
    ia.s_b = sb_mid;
    ia.a_support = sa_mid.support();
    ia.b_support = sb_mid.support();
    ia.v = value_of_information(m, r, sa_mid, sb_mid);

    const auto& [sa_1, sb_1] =
        pick_by_s_b(solve_cross_section(cross_section(m, r, i_1)), sb_mid);
    const auto& [sa_2, sb_2] =
        pick_by_s_b(solve_cross_section(cross_section(m, r, i_2)), sb_mid);

    // s_b must be constant across the interval.  A jump between node-free
    // sample points means the cross-section equilibrium is non-unique at some
    // interior point, which the interval analysis cannot represent.
    for (double frac : {0.15, 0.85}) {
      const auto probe =
          pick_by_s_b(solve_cross_section(cross_section(m, r, lo + frac * w)), sb_mid);
      if (probe.second.max_abs_diff(sb_mid) > 1e-7)
        throw NonUniqueInterior("s_b jumps between nodes; equilibrium not unique inside the interval");
    }
    if (sb_1.max_abs_diff(sb_mid) > 1e-7 || sb_2.max_abs_diff(sb_mid) > 1e-7)
      throw NonUniqueInterior("s_b jumps between nodes; equilibrium not unique inside the interval");

    // Fit u_i = (1 - I) * s_a_i as a + b*I from the two sample points.
    ia.s_a_coeffs.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const double u1 = (1.0 - i_1) * sa_1[i];
      const double u2 = (1.0 - i_2) * sa_2[i];
      SaCoeff& co = ia.s_a_coeffs[i];
      co.b = (u2 - u1) / (i_2 - i_1);
      co.a = u1 - co.b * i_1;
      co.c = 1.0;
      if (ia.s_a_unique) {
        const double u_mid = (1.0 - i_mid) * sa_mid[i];
        if (std::abs(co.a + co.b * i_mid - u_mid) > 1e-6)
          throw InternalError("rational-form fit failed verification at the midpoint");
      }
    }
    out.push_back(std::move(ia));
  }
  return out;
}

MixedStrategy s_a_at(const BimatrixGame& m, const BimatrixGame& r,
                     const IntervalAnalysis& interval, double i_val) {
  if (!interval.s_a_unique) {
    const EquilibriumSet eqs = solve_cross_section(cross_section(m, r, i_val));
    return pick_by_s_b(eqs, interval.s_b).first;
  }
  std::vector<double> p(interval.s_a_coeffs.size(), 0.0);
  if (i_val > 1.0 - 1e-9) {
    // Limit as I -> 1: finite only when a + b cancels; the limit is -b/c.
    for (std::size_t i = 0; i < p.size(); ++i) {
      const SaCoeff& co = interval.s_a_coeffs[i];
      if (std::abs(co.a + co.b) > 1e-7)
        throw InternalError("s_a limit at I = 1 does not exist for this interval");
      p[i] = std::max(0.0, -co.b / co.c);
    }
  } else {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const SaCoeff& co = interval.s_a_coeffs[i];
      p[i] = std::max(0.0, (co.a + co.b * i_val) / (co.c * (1.0 - i_val)));
    }
  }
  double total = 0.0;
  for (double v : p) total += v;
  if (std::abs(total - 1.0) > 1e-6)
    throw InternalError("rational-form s_a does not sum to 1 at the requested point");
  for (double& v : p) v /= total;
  return MixedStrategy(p);
}

}  // namespace oracle_games
