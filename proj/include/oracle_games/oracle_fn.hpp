#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oracle_games/types.hpp"

namespace oracle_games {

enum class OracleFamily { sqrt_k, sqrt_shift, linear_slope, constant_c, piecewise_linear };

enum class DerivSide { left, right };

/// Closed x-range over which I'(x) equals a requested slope.  Degenerate
/// (lo == hi) for strictly concave functions.
struct SlopeInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Response-probability curve I(x) of an oracle.
///
/// Families: sqrt_k       I = min(sqrt(k x), 1)
///           sqrt_shift   I = min(sqrt(x + a) - sqrt(a), 1)
///           linear_slope I = min(b x, 1)
///           constant_c   I = c
///           piecewise_linear through a breakpoint list
///
/// Two optional transforms apply on top of the family formula: a payment cap
/// x_cap (evaluation saturates beyond it) and a normalization shift c mapping
/// I to (I - c)/(1 - c), used to move I(0) to 0 without changing equilibria.
class OracleFunction {
 public:
  static OracleFunction sqrt_k(double k);
  static OracleFunction sqrt_shift(double a);
  static OracleFunction linear_slope(double b);
  static OracleFunction constant_c(double c);
  static OracleFunction piecewise_linear(std::vector<std::pair<double, double>> points);

  OracleFamily family() const { return family_; }
  const std::vector<double>& params() const { return params_; }
  const std::vector<std::pair<double, double>>& points() const { return points_; }
  std::optional<double> x_cap() const { return x_cap_; }
  double shift() const { return shift_; }

  OracleFunction with_x_cap(double cap) const;
  /// Composes the normalization shift (I - c)/(1 - c) onto this function.
  OracleFunction with_shift(double c) const;

  double eval(double x) const;
  double derivative(double x, DerivSide side = DerivSide::right) const;

  /// Smallest x with eval(x) = a.
  double level_x(double a) const;

  /// Closed interval where the derivative equals b; throws SlopeOutOfRange
  /// (with a fallback point) when the slope is never attained.
  SlopeInterval slope_x(double b) const;

  double sup_value() const;     // sup of eval over [0, inf)
  double saturation_x() const;  // smallest x attaining sup_value

  /// Continuous, nondecreasing, weakly concave, eval(0) = 0.
  bool is_normalized(double tol = 1e-9) const;

  std::string describe() const;

 private:
  OracleFunction(OracleFamily family, std::vector<double> params,
                 std::vector<std::pair<double, double>> points);

  double base_eval(double x) const;  // pre-shift value (cap applied)
  double base_derivative(double x, DerivSide side) const;
  double base_sup() const;
  double base_saturation_x() const;

  OracleFamily family_;
  std::vector<double> params_;
  std::vector<std::pair<double, double>> points_;  // piecewise breakpoints
  std::optional<double> x_cap_;
  double shift_ = 0.0;
};

/// Running-maximum (nondecreasing) piecewise function through the samples.
OracleFunction monotone_envelope(const std::vector<std::pair<double, double>>& samples);

/// Upper concave envelope as a piecewise-linear function.  Analytic families
/// are sampled on a uniform grid first.
OracleFunction concavify(const OracleFunction& f, std::size_t grid = 4096);

struct NormalizationReport {
  OracleFunction original;
  OracleFunction envelope;  // nondecreasing version
  OracleFunction concave;   // final normalized curve (before any game shift)
  bool shifted_game_required = false;
  double shift_c = 0.0;
};

NormalizationReport normalize(const OracleFunction& f,
                              std::optional<double> x_hi = std::nullopt,
                              std::size_t grid = 4096);

/// Rewrites (M, I) with I(0) = c > 0 as the equivalent (N, J) with J(0) = 0,
/// where N = (1-c)M + cR and J = (I - c)/(1 - c).  Identity when c = 0;
/// DegenerateOracle when c = 1.
std::pair<BimatrixGame, OracleFunction> shift_to_zero(const BimatrixGame& m,
                                                      const OracleFunction& f);

}  // namespace oracle_games
