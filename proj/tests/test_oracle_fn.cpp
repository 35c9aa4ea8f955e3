#include <doctest.h>

#include <cmath>
#include <limits>

#include "fixtures.hpp"
#include "oracle_games/errors.hpp"
#include "oracle_games/game.hpp"
#include "oracle_games/oracle_fn.hpp"

using namespace oracle_games;

TEST_CASE("oracle evaluation") {
  CHECK(OracleFunction::sqrt_k(1).eval(1.0 / 9) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(OracleFunction::sqrt_k(4).eval(1.0 / 16) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(OracleFunction::constant_c(1).eval(0.0) == 1.0);
  CHECK(OracleFunction::sqrt_k(1).eval(4.0) == 1.0);  // clamped at 1
  CHECK_THROWS_AS(OracleFunction::sqrt_k(1).eval(-0.5), NegativePayment);
}

TEST_CASE("oracle derivative") {
  CHECK(OracleFunction::sqrt_k(1).derivative(1.0 / 9) ==
        doctest::Approx(1.5).epsilon(1e-12));
  CHECK(OracleFunction::sqrt_shift(1).derivative(0.0, DerivSide::right) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(OracleFunction::linear_slope(2).derivative(0.2) == 2.0);
  CHECK(std::isinf(OracleFunction::sqrt_k(1).derivative(0.0, DerivSide::right)));
  CHECK_THROWS_AS(OracleFunction::sqrt_k(1).derivative(0.0, DerivSide::left),
                  OutsideDomain);
}

TEST_CASE("level inversion") {
  CHECK(OracleFunction::sqrt_k(4).level_x(0.5) == doctest::Approx(1.0 / 16).epsilon(1e-14));
  CHECK(OracleFunction::sqrt_k(2).level_x(0.0) == 0.0);
  CHECK(OracleFunction::sqrt_k(1).level_x(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(OracleFunction::constant_c(0.5).level_x(0.9), LevelUnreachable);

  // eval and level_x are mutual inverses on the increasing range.
  for (double a : {0.05, 0.2, 0.55, 0.9}) {
    CHECK(OracleFunction::sqrt_k(3).eval(OracleFunction::sqrt_k(3).level_x(a)) ==
          doctest::Approx(a).epsilon(1e-10));
    CHECK(OracleFunction::sqrt_shift(2).eval(OracleFunction::sqrt_shift(2).level_x(a)) ==
          doctest::Approx(a).epsilon(1e-10));
  }
}

TEST_CASE("slope inversion") {
  const SlopeInterval si = OracleFunction::sqrt_k(1).slope_x(1.5);
  CHECK(si.lo == doctest::Approx(1.0 / 9).epsilon(1e-12));
  CHECK(si.hi == doctest::Approx(1.0 / 9).epsilon(1e-12));

  const SlopeInterval lin = OracleFunction::linear_slope(2).slope_x(2.0);
  CHECK(lin.lo == doctest::Approx(0.0));
  CHECK(lin.hi == doctest::Approx(0.5).epsilon(1e-12));

  const SlopeInterval steep = OracleFunction::sqrt_k(1).slope_x(10.0);
  CHECK(steep.lo == doctest::Approx(1.0 / 400).epsilon(1e-12));

  // Slope never attained: fallback is the sup of {x : I'(x) >= b}.
  try {
    OracleFunction::linear_slope(2).slope_x(1.0);
    FAIL("expected SlopeOutOfRange");
  } catch (const SlopeOutOfRange& e) {
    CHECK(e.fallback_x() == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("payment cap saturates evaluation") {
  const OracleFunction f = OracleFunction::sqrt_k(1).with_x_cap(0.25);
  CHECK(f.eval(0.25) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(f.eval(2.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(f.sup_value() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(f.saturation_x() == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("monotone envelope") {
  const OracleFunction e =
      monotone_envelope({{0, 0}, {1, 0.5}, {2, 0.3}, {3, 0.8}});
  CHECK(e.eval(1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e.eval(2.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e.eval(3.0) == doctest::Approx(0.8).epsilon(1e-12));

  const OracleFunction fixed = monotone_envelope({{0, 0}, {1, 0.4}, {2, 0.9}});
  CHECK(fixed.eval(1.0) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(fixed.eval(1.5) == doctest::Approx(0.65).epsilon(1e-12));

  const OracleFunction down = monotone_envelope({{0, 0.4}, {1, 0.2}});
  CHECK(down.eval(0.0) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(down.eval(1.0) == doctest::Approx(0.4).epsilon(1e-12));

  CHECK_THROWS_AS(monotone_envelope({}), EmptyInput);
}

TEST_CASE("concavification") {
  const OracleFunction e =
      monotone_envelope({{0, 0}, {1, 0.5}, {2, 0.3}, {3, 0.8}});
  const OracleFunction j = concavify(e);
  // The flat shelf at (2, 0.5) is lifted onto the chord from (1,0.5) to (3,0.8).
  CHECK(j.eval(2.0) == doctest::Approx(0.65).epsilon(1e-12));
  for (double x : {0.0, 0.5, 1.0, 1.7, 2.4, 3.0})
    CHECK(j.eval(x) >= e.eval(x) - 1e-12);

  // Concave input is a fixed point within grid resolution.
  const OracleFunction root = OracleFunction::sqrt_k(1);
  const OracleFunction jr = concavify(root);
  for (double x : {0.05, 0.2, 0.5, 0.8})
    CHECK(jr.eval(x) == doctest::Approx(root.eval(x)).epsilon(1e-5));

  const OracleFunction seg = concavify(OracleFunction::piecewise_linear({{0, 0}, {1, 1}}));
  CHECK(seg.eval(0.5) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("normalize pipeline") {
  const OracleFunction wavy = OracleFunction::piecewise_linear(
      {{0, 0}, {0.5, 0.4}, {1, 0.2}, {1.5, 0.5}, {2, 0.45}, {3, 0.9}});
  const NormalizationReport rep = normalize(wavy);
  CHECK(rep.concave.is_normalized());
  CHECK_FALSE(rep.shifted_game_required);
  // Envelope is nondecreasing and the hull dominates the input pointwise.
  double prev = -1.0;
  for (double x = 0.0; x <= 3.0; x += 0.05) {
    CHECK(rep.envelope.eval(x) >= prev - 1e-12);
    prev = rep.envelope.eval(x);
    CHECK(rep.concave.eval(x) >= wavy.eval(x) - 1e-12);
  }
  // Slopes of the final curve are nonincreasing.
  double prev_slope = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < rep.concave.points().size(); ++i) {
    const auto& p0 = rep.concave.points()[i];
    const auto& p1 = rep.concave.points()[i + 1];
    const double s = (p1.second - p0.second) / (p1.first - p0.first);
    CHECK(s <= prev_slope + 1e-12);
    prev_slope = s;
  }

  // Already-normalized analytic oracles pass through untouched.
  const NormalizationReport fixed = normalize(OracleFunction::sqrt_k(1));
  CHECK(fixed.concave.family() == OracleFamily::sqrt_k);
  CHECK_FALSE(fixed.shifted_game_required);

  const NormalizationReport shifted = normalize(OracleFunction::constant_c(0.4));
  CHECK(shifted.shifted_game_required);
  CHECK(shifted.shift_c == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("shift to zero") {
  const BimatrixGame m = fixtures::example1();

  // c = 0: identity.
  const auto [m0, f0] = shift_to_zero(m, OracleFunction::sqrt_k(1));
  CHECK(m0.at(0, 1).a == m.at(0, 1).a);
  CHECK(f0.eval(0.25) == doctest::Approx(0.5).epsilon(1e-14));

  // I(x) = (1 + min(x,1))/2: at x = 0.5 the cross-section matches the
  // shifted game's cross-section cell for cell.
  const OracleFunction half = OracleFunction::piecewise_linear({{0, 0.5}, {1, 1.0}});
  const auto [n, j] = shift_to_zero(m, half);
  CHECK(j.eval(0.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(j.eval(0.5) == doctest::Approx(0.5).epsilon(1e-12));
  const BimatrixGame r = maximal_matrix(m);
  const BimatrixGame lhs = cross_section(m, r, half.eval(0.5));
  CHECK(lhs.at(0, 1).a == doctest::Approx(1.5).epsilon(1e-12));
  const BimatrixGame rhs = cross_section(n, maximal_matrix(n), j.eval(0.5));
  CHECK(rhs.at(0, 1).a == doctest::Approx(1.5).epsilon(1e-12));

  // Constant oracle: J collapses to 0 and N is the c-level cross-section.
  const auto [nc, jc] = shift_to_zero(m, OracleFunction::constant_c(0.4));
  CHECK(jc.eval(3.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(nc.at(0, 1).a == doctest::Approx(0.8).epsilon(1e-12));

  CHECK_THROWS_AS(shift_to_zero(m, OracleFunction::constant_c(1.0)), DegenerateOracle);
}

TEST_CASE("shift to zero preserves cross-sections on random games") {
  fixtures::Rng rng(23);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    BimatrixGame g = fixtures::random_game(rng, 2 + rng.index(3), 2 + rng.index(3), false);
    try {
      const BimatrixGame r = maximal_matrix(g);
      const double c = 0.1 + 0.8 * rng.uniform();
      // An oracle with I(0) = c > 0 forces the shifted-game rewrite.
      const OracleFunction raw =
          OracleFunction::piecewise_linear({{0, c}, {2, std::min(1.0, c + 0.5)}});
      const auto [n, j] = shift_to_zero(g, raw);
      const BimatrixGame rn = maximal_matrix(n);
      const double x = 2.0 * rng.uniform();
      const BimatrixGame lhs = cross_section(g, r, raw.eval(x));
      const BimatrixGame rhs = cross_section(n, rn, j.eval(x));
      for (std::size_t idx = 0; idx < lhs.cells().size(); ++idx) {
        CHECK(std::abs(lhs.cells()[idx].a - rhs.cells()[idx].a) <= 1e-12);
        CHECK(std::abs(lhs.cells()[idx].b - rhs.cells()[idx].b) <= 1e-12);
      }
      ++checked;
    } catch (const AmbiguousBestResponse&) {
      // Random ties are astronomically unlikely but tolerated.
    }
  }
  CHECK(checked >= 190);
}

TEST_CASE("derivative is nonincreasing for normalized oracles") {
  for (const OracleFunction& f :
       {OracleFunction::sqrt_k(2), OracleFunction::sqrt_shift(0.5),
        OracleFunction::linear_slope(1.5),
        OracleFunction::piecewise_linear({{0, 0}, {0.3, 0.6}, {1, 0.9}, {2, 1.0}})}) {
    double prev = std::numeric_limits<double>::infinity();
    const double hi = f.saturation_x();
    for (int i = 1; i <= 1000; ++i) {
      const double x = hi * i / 1000.0;
      const double d = f.derivative(x, DerivSide::right);
      CHECK(d <= prev + 1e-9);
      prev = d;
    }
  }
}

TEST_CASE("shift composition") {
  // Shifting twice composes: c' = c0 + c*(1 - c0).
  const OracleFunction base = OracleFunction::piecewise_linear({{0, 0.2}, {1, 0.8}});
  const OracleFunction once = base.with_shift(0.2);
  CHECK(once.eval(0.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(once.eval(1.0) == doctest::Approx(0.75).epsilon(1e-12));  // (0.8-0.2)/0.8
}
