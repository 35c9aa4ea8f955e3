#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oracle_games/oracle_fn.hpp"
#include "oracle_games/solver.hpp"
#include "oracle_games/types.hpp"

namespace oracle_games {

struct DeviationCertificate {
  double max_gain_a_strategy = 0.0;  // A: switch rows at fixed payment
  double max_gain_a_payment = 0.0;   // A: change the payment (rows re-optimized)
  double max_gain_b = 0.0;           // B: switch columns
  double epsilon = 0.0;
  bool passed = false;
  std::string worst_deviation;
};

/// Exact epsilon-equilibrium check: best unilateral gains for both players.
/// Payment deviations are evaluated on a uniform grid over [0, max(x_cap,
/// saturation)] plus the analytic critical points (0, eq.x, multiplicity
/// endpoints, saturation, oracle kinks, the slope-inversion point) and any
/// caller-supplied payments such as node positions.
DeviationCertificate deviation_check(const BimatrixGame& m, const BimatrixGame& r,
                                     const OracleFunction& f,
                                     const OracleEquilibrium& eq,
                                     double epsilon = 1e-6, std::size_t x_grid = 10000,
                                     const std::vector<double>& extra_x = {});

struct SimulationResult {
  std::uint64_t trials = 0;
  double mean_e_a = 0.0;
  double mean_e_b = 0.0;
  double std_err_a = 0.0;
  double std_err_b = 0.0;
  double response_rate = 0.0;
  std::uint64_t seed = 0;
};

/// Monte-Carlo play of the extensive form: B draws a pure strategy, the
/// oracle responds with probability I(x), A best-responds on a report and
/// draws from s_a otherwise.  Bit-stable across platforms: the generator is
/// splitmix64 and uniforms are (next() >> 11) * 2^-53.
SimulationResult simulate(const BimatrixGame& m, const OracleFunction& f,
                          const MixedStrategy& s_a, const MixedStrategy& s_b, double x,
                          std::uint64_t trials, std::uint64_t seed);

}  // namespace oracle_games
