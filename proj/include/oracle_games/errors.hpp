#pragma once

#include <stdexcept>
#include <string>

namespace oracle_games {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ORACLE_GAMES_DEFINE_ERROR(Name)       \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

ORACLE_GAMES_DEFINE_ERROR(DimensionMismatch);
ORACLE_GAMES_DEFINE_ERROR(ShapeMismatch);
ORACLE_GAMES_DEFINE_ERROR(AmbiguousBestResponse);
ORACLE_GAMES_DEFINE_ERROR(NotMaximalMatrix);
ORACLE_GAMES_DEFINE_ERROR(NegativePayment);
ORACLE_GAMES_DEFINE_ERROR(OutsideDomain);
ORACLE_GAMES_DEFINE_ERROR(LevelUnreachable);
ORACLE_GAMES_DEFINE_ERROR(EmptyInput);
ORACLE_GAMES_DEFINE_ERROR(DegenerateOracle);
ORACLE_GAMES_DEFINE_ERROR(NotNormalized);
ORACLE_GAMES_DEFINE_ERROR(NoEquilibriumFound);
ORACLE_GAMES_DEFINE_ERROR(TooLarge);
ORACLE_GAMES_DEFINE_ERROR(InconsistentDominance);
ORACLE_GAMES_DEFINE_ERROR(NonUniqueInterior);
ORACLE_GAMES_DEFINE_ERROR(MultipleBaseEquilibria);
ORACLE_GAMES_DEFINE_ERROR(NonMonotoneValue);
ORACLE_GAMES_DEFINE_ERROR(NoMixExists);
ORACLE_GAMES_DEFINE_ERROR(InternalError);
ORACLE_GAMES_DEFINE_ERROR(ParseError);

#undef ORACLE_GAMES_DEFINE_ERROR

/// Requested derivative level is never attained.  Carries the supremum of
/// {x : I'(x) >= b} as a fallback point for solvers that walk slope levels.
class SlopeOutOfRange : public Error {
 public:
  SlopeOutOfRange(const std::string& what, double fallback_x)
      : Error(what), fallback_x_(fallback_x) {}
  double fallback_x() const { return fallback_x_; }

 private:
  double fallback_x_;
};

}  // namespace oracle_games
