#pragma once

#include <vector>

namespace oracle_games::lp {

enum class Relation { le, eq };

struct Constraint {
  std::vector<double> coeffs;
  Relation rel = Relation::le;
  double rhs = 0.0;
};

struct Result {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  double objective = 0.0;
  std::vector<double> x;
};

/// maximize objective . x  subject to the constraints and x >= 0.
/// Dense two-phase simplex with Bland's rule; sized for the tiny programs
/// that dominance analysis produces (tens of variables at most).
Result maximize(const std::vector<double>& objective,
                const std::vector<Constraint>& constraints);

}  // namespace oracle_games::lp
