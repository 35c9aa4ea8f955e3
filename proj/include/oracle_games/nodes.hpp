#pragma once

#include <cstddef>
#include <vector>

#include "oracle_games/nash.hpp"
#include "oracle_games/oracle_fn.hpp"
#include "oracle_games/types.hpp"

namespace oracle_games {

enum class NodeDirection { becomes_dominated, becomes_undominated };

/// A dominance-status change of one of B's strategies as the response
/// probability I increases.
struct NodeEvent {
  double i_star = 0.0;  // I value of the node
  double x_star = 0.0;  // payment reaching i_star (NaN without an oracle)
  std::size_t strategy = 0;
  NodeDirection direction = NodeDirection::becomes_dominated;
  /// Dominating mixture just on the dominated side of the node.
  MixedStrategy witness;
};

/// Coefficients of the rational form probability_i(I) = (a + b*I)/(c*(1-I)).
struct SaCoeff {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
};

/// Cross-section structure on one open interval between consecutive nodes:
/// supports and s_b are constant, s_a follows the rational form, and the
/// value of information v is constant.
struct IntervalAnalysis {
  double i_lo = 0.0;
  double i_hi = 1.0;
  std::vector<std::size_t> a_support;
  std::vector<std::size_t> b_support;
  MixedStrategy s_b;
  std::vector<SaCoeff> s_a_coeffs;  // one per A strategy
  double v = 0.0;
  /// False when the interval carries a continuum of equilibria sharing s_b;
  /// the coefficients then describe one representative member.
  bool s_a_unique = true;
};

/// Scans each B strategy's dominance margin over I in [0,1] on `grid` cells,
/// bisects every sign change to |dI| <= 1e-10, and reports the events sorted
/// by i_star.  Payments x_star are filled in via level_x when an oracle is
/// supplied.  Throws InconsistentDominance when a margin changes sign more
/// than twice.
std::vector<NodeEvent> find_nodes(const BimatrixGame& m, const BimatrixGame& r,
                                  const OracleFunction* oracle = nullptr,
                                  std::size_t grid = 1024);

/// Per-interval analysis between consecutive nodes (plus the leading and
/// trailing intervals).  Throws NonUniqueInterior when a midpoint
/// cross-section has equilibria that disagree on s_b.
std::vector<IntervalAnalysis> interval_profile(const BimatrixGame& m,
                                               const BimatrixGame& r,
                                               const std::vector<NodeEvent>& nodes);

/// Evaluates the interval's s_a at response probability i_val.  At i_val = 1
/// the rational form is evaluated as its limit.  For intervals flagged
/// s_a_unique = false the cross-section is re-solved at i_val instead.
MixedStrategy s_a_at(const BimatrixGame& m, const BimatrixGame& r,
                     const IntervalAnalysis& interval, double i_val);

}  // namespace oracle_games
