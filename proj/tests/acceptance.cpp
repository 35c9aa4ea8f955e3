// Acceptance gate: one pass/fail line per criterion, exit code = failures.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracle_games/errors.hpp"
#include "oracle_games/game.hpp"
#include "oracle_games/nash.hpp"
#include "oracle_games/nodes.hpp"
#include "oracle_games/oracle_fn.hpp"
#include "oracle_games/solver.hpp"
#include "oracle_games/verify.hpp"

using namespace oracle_games;

namespace {

int g_check_failures = 0;

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_check_failures;
    std::printf("    check failed: %s\n", what.c_str());
  }
}

void expect_near(double got, double want, double tol, const std::string& what) {
  if (!near(got, want, tol)) {
    ++g_check_failures;
    std::printf("    check failed: %s (got %.12g, want %.12g, tol %g)\n", what.c_str(),
                got, want, tol);
  }
}

/// Every equilibrium emitted while running the criteria, re-checked in
/// criterion 7.
struct EmittedEquilibrium {
  BimatrixGame m;
  OracleFunction f;
  OracleEquilibrium eq;
  std::vector<double> extra_x;  // node payments worth probing
  std::string origin;
};

std::vector<EmittedEquilibrium> g_emitted;

std::vector<double> node_payments(const BimatrixGame& m, const OracleFunction& f) {
  std::vector<double> xs;
  try {
    for (const NodeEvent& n : find_nodes(m, maximal_matrix(m), nullptr, 101)) {
      try {
        xs.push_back(f.level_x(n.i_star));
      } catch (const LevelUnreachable&) {
      }
    }
  } catch (const Error&) {
  }
  return xs;
}

OracleEquilibrium emit(const BimatrixGame& m, const OracleFunction& f,
                       const std::string& origin,
                       const GameAnalysis* analysis = nullptr,
                       std::size_t grid = 1024) {
  OracleEquilibrium eq = solve_oracle_game(m, f, analysis, grid);
  g_emitted.push_back({m, f, eq, node_payments(m, f), origin});
  return eq;
}

bool criterion1() {
  const EquilibriumSet e1 = solve_cross_section(fixtures::example1());
  expect(e1.unique && e1.profiles.size() == 1, "2x2 base equilibrium unique");
  if (!e1.profiles.empty()) {
    expect_near(e1.profiles[0].first[0], 2.0 / 3, 1e-9, "2x2 base s_a[0]");
    expect_near(e1.profiles[0].first[1], 1.0 / 3, 1e-9, "2x2 base s_a[1]");
    expect_near(e1.profiles[0].second[0], 2.0 / 3, 1e-9, "2x2 base s_b[0]");
    expect_near(e1.profiles[0].second[1], 1.0 / 3, 1e-9, "2x2 base s_b[1]");
  }

  const EquilibriumSet e2 = solve_cross_section(fixtures::example2());
  expect(e2.unique && e2.profiles.size() == 1, "3x3 base equilibrium unique");
  if (!e2.profiles.empty()) {
    const double want[3] = {4.0 / 7, 2.0 / 7, 1.0 / 7};
    for (int i = 0; i < 3; ++i) {
      expect_near(e2.profiles[0].first[i], want[i], 1e-9, "3x3 base s_a");
      expect_near(e2.profiles[0].second[i], want[i], 1e-9, "3x3 base s_b");
    }
  }
  return true;
}

bool criterion2() {
  const BimatrixGame m = fixtures::example1();
  const GameAnalysis an = analyze_game(m);

  const OracleEquilibrium c1 = emit(m, OracleFunction::sqrt_shift(1), "c2 flat", &an);
  expect(c1.case_label == EqCase::interior_zero, "flat oracle -> pay nothing");
  expect_near(c1.x, 0.0, 1e-8, "flat oracle payment");
  expect_near(c1.s_b[0], 2.0 / 3, 1e-8, "flat oracle s_b[0]");
  expect_near(c1.s_a[0], 2.0 / 3, 1e-8, "flat oracle s_a[0]");

  const OracleEquilibrium c2 = emit(m, OracleFunction::sqrt_k(1), "c2 sqrt", &an);
  expect(c2.case_label == EqCase::interval_interior, "sqrt oracle -> interior");
  expect_near(c2.x, 1.0 / 9, 1e-8, "sqrt oracle payment");
  expect_near(c2.s_a[0], 5.0 / 6, 1e-8, "sqrt oracle s_a[0]");
  expect_near(c2.s_a[1], 1.0 / 6, 1e-8, "sqrt oracle s_a[1]");
  expect_near(c2.s_b[0], 2.0 / 3, 1e-8, "sqrt oracle s_b[0]");

  const OracleEquilibrium c3 = emit(m, OracleFunction::sqrt_k(4), "c2 2sqrt", &an);
  expect(c3.case_label == EqCase::node_mix, "steep oracle -> node mix");
  expect_near(c3.x, 1.0 / 16, 1e-8, "steep oracle payment");
  expect_near(c3.s_a[0], 1.0, 1e-8, "steep oracle s_a[0]");
  expect_near(c3.s_b[0], 7.0 / 8, 1e-8, "steep oracle s_b[0]");
  expect_near(c3.s_b[1], 1.0 / 8, 1e-8, "steep oracle s_b[1]");
  return true;
}

bool criterion3() {
  const BimatrixGame m = fixtures::example2();
  const BimatrixGame r = maximal_matrix(m);
  const auto nodes = find_nodes(m, r);
  expect(nodes.size() == 2, "3x3 game has two nodes");
  if (nodes.size() == 2) {
    expect_near(nodes[0].i_star, 0.2, 1e-9, "first node at I=1/5");
    expect(nodes[0].strategy == 2, "first node drops B's third strategy");
    expect_near(nodes[1].i_star, 0.5, 1e-9, "second node at I=1/2");
    expect(nodes[1].strategy == 1, "second node drops B's second strategy");
  }

  const auto iv = interval_profile(m, r, nodes);
  expect(iv.size() == 3, "three intervals");
  if (iv.size() == 3) {
    expect_near(iv[0].v, 8.0 / 7, 1e-10, "V on first interval");
    expect_near(iv[1].v, 2.0 / 3, 1e-10, "V on second interval");

    auto coeff = [](const SaCoeff& c, double i_val) {
      return (c.a + c.b * i_val) / (c.c * (1.0 - i_val));
    };
    for (double i_val : {0.03, 0.1, 0.17}) {
      expect_near(coeff(iv[0].s_a_coeffs[0], i_val), (4 + i_val) / (7 * (1 - i_val)),
                  1e-8, "first-interval s_a[0]");
      expect_near(coeff(iv[0].s_a_coeffs[1], i_val), (2 - 3 * i_val) / (7 * (1 - i_val)),
                  1e-8, "first-interval s_a[1]");
      expect_near(coeff(iv[0].s_a_coeffs[2], i_val), (1 - 5 * i_val) / (7 * (1 - i_val)),
                  1e-8, "first-interval s_a[2]");
    }
    for (double i_val : {0.25, 0.35, 0.45}) {
      expect_near(coeff(iv[1].s_a_coeffs[0], i_val), (2 - i_val) / (3 * (1 - i_val)),
                  1e-8, "second-interval s_a[0]");
      expect_near(coeff(iv[1].s_a_coeffs[1], i_val), (1 - 2 * i_val) / (3 * (1 - i_val)),
                  1e-8, "second-interval s_a[1]");
      expect_near(coeff(iv[1].s_a_coeffs[2], i_val), 0.0, 1e-8,
                  "second-interval s_a[2]");
    }
  }
  return true;
}

bool criterion4() {
  const BimatrixGame m = fixtures::example2();
  const GameAnalysis an = analyze_game(m);

  const int steps = 500;
  const double k_lo = 0.1, k_hi = 5.0;
  std::vector<double> ks(steps), xs(steps), is(steps);
  std::vector<EqCase> cases(steps);
  for (int i = 0; i < steps; ++i) {
    ks[i] = k_lo + (k_hi - k_lo) * i / (steps - 1);
    const OracleEquilibrium eq =
        solve_oracle_game(m, OracleFunction::sqrt_k(ks[i]), &an);
    xs[i] = eq.x;
    is[i] = eq.i_val;
    cases[i] = eq.case_label;
    if (i % 50 == 0)
      g_emitted.push_back({m, OracleFunction::sqrt_k(ks[i]), eq,
                           node_payments(m, OracleFunction::sqrt_k(ks[i])),
                           "c4 sweep"});
  }

  // Case labels change exactly three times; refine each boundary in k.
  std::vector<double> boundaries;
  for (int i = 0; i + 1 < steps; ++i) {
    if (cases[i] == cases[i + 1]) continue;
    double lo = ks[i], hi = ks[i + 1];
    const EqCase left = cases[i];
    for (int it = 0; it < 30; ++it) {
      const double mid = 0.5 * (lo + hi);
      const EqCase c = solve_oracle_game(m, OracleFunction::sqrt_k(mid), &an).case_label;
      (c == left ? lo : hi) = mid;
    }
    boundaries.push_back(0.5 * (lo + hi));
  }
  expect(boundaries.size() == 3, "three case boundaries in the sweep");
  if (boundaries.size() == 3) {
    expect_near(boundaries[0], 0.35, 1e-3, "boundary near k=0.35");
    expect_near(boundaries[1], 0.6, 1e-3, "boundary near k=0.6");
    expect_near(boundaries[2], 1.5, 1e-3, "boundary near k=1.5");
  }

  // Continuity of x_e(k) and I(x_e) inside each case region: no step jump may
  // dwarf its neighbors.
  auto continuous = [&](const std::vector<double>& y, const char* name) {
    for (int i = 1; i + 2 < steps; ++i) {
      if (cases[i - 1] != cases[i] || cases[i] != cases[i + 1] ||
          cases[i + 1] != cases[i + 2])
        continue;
      const double jump = std::abs(y[i + 1] - y[i]);
      const double local =
          std::max(std::abs(y[i] - y[i - 1]), std::abs(y[i + 2] - y[i + 1]));
      expect(jump <= 10 * local + 1e-9,
             std::string(name) + " continuous at k=" + std::to_string(ks[i]));
    }
  };
  continuous(xs, "x_e(k)");
  continuous(is, "I(x_e)(k)");
  return true;
}

bool criterion5() {
  const BimatrixGame m = fixtures::optout();
  const GameAnalysis an = analyze_game(m);
  auto solve_k = [&](double k) {
    return solve_oracle_game(m, OracleFunction::sqrt_k(k), &an);
  };

  // E_a(k) over a grid spanning both regimes.
  std::vector<double> ks;
  for (double k = 0.04; k < 0.34; k += 0.03) ks.push_back(k);
  for (double k : {0.4, 0.5, 0.7, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0, 30.0, 100.0})
    ks.push_back(k);
  std::vector<double> ea(ks.size()), optw(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const OracleEquilibrium eq = solve_k(ks[i]);
    ea[i] = eq.e_a;
    optw[i] = eq.s_b[2];
    if (i % 4 == 0)
      g_emitted.push_back({m, OracleFunction::sqrt_k(ks[i]), eq,
                           node_payments(m, OracleFunction::sqrt_k(ks[i])),
                           "c5 profile"});
  }

  // Unimodal: nondecreasing up to the peak, nonincreasing after.
  const std::size_t peak = static_cast<std::size_t>(
      std::max_element(ea.begin(), ea.end()) - ea.begin());
  for (std::size_t i = 0; i + 1 <= peak; ++i)
    expect(ea[i] <= ea[i + 1] + 1e-9, "E_a rising before the peak");
  for (std::size_t i = peak; i + 1 < ea.size(); ++i)
    expect(ea[i] >= ea[i + 1] - 1e-9, "E_a falling after the peak");

  // The maximizer sits at the regime boundary; refine it by bisecting the
  // case-label change.
  double lo = 0.2, hi = 0.6;
  expect(solve_k(lo).case_label == EqCase::interval_interior, "k=0.2 pre-node");
  expect(solve_k(hi).case_label == EqCase::node_mix, "k=0.6 post-node");
  for (int it = 0; it < 30; ++it) {
    const double mid = 0.5 * (lo + hi);
    (solve_k(mid).case_label == EqCase::interval_interior ? lo : hi) = mid;
  }
  expect_near(0.5 * (lo + hi), 1.0 / 3, 1e-3, "E_a maximizer at k=1/3");

  expect(solve_k(0.3).e_a > 2.0 + 1e-9, "E_a beats the no-oracle value below 1/3");
  for (double k : {2.0, 3.0, 5.0, 10.0, 50.0, 100.0})
    expect(solve_k(k).e_a < 2.0, "E_a below 2 for k >= 2");
  expect(solve_k(100).e_a < 0.2, "E_a(100) < 0.2");

  // Opt-out weight is nondecreasing in k beyond the node.
  double prev = -1.0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 1.0 / 3) continue;
    expect(optw[i] >= prev - 1e-8, "opt-out weight nondecreasing");
    prev = optw[i];
  }
  return true;
}

bool criterion6() {
  // (a) nonnegative value of information at solved equilibria.
  {
    fixtures::Rng rng(2026);
    int solved = 0, attempts = 0;
    while (solved < 500 && attempts < 700) {
      ++attempts;
      const BimatrixGame g = fixtures::random_game(
          rng, 2 + rng.index(3), 2 + rng.index(3), rng.index(2) == 0);
      const double k = 0.2 + 3.0 * rng.uniform();
      try {
        const OracleEquilibrium eq =
            solve_oracle_game(g, OracleFunction::sqrt_k(k), nullptr, 101);
        expect(eq.v_at_eq >= -1e-12, "V >= 0 at a solved equilibrium");
        if (solved % 5 == 0)
          g_emitted.push_back({g, OracleFunction::sqrt_k(k), eq,
                               node_payments(g, OracleFunction::sqrt_k(k)),
                               "c6a random"});
        ++solved;
      } catch (const Error&) {
        // games outside the solver's uniqueness assumptions are skipped
      }
    }
    expect(solved >= 500, "suite (a) solved 500 random games");
  }

  // (b) once dominated, stays dominated along an I grid (zero-sum games).
  {
    fixtures::Rng rng(2027);
    for (int t = 0; t < 500; ++t) {
      const BimatrixGame g =
          fixtures::random_game(rng, 2 + rng.index(3), 2 + rng.index(3), true);
      const BimatrixGame r = maximal_matrix(g);
      for (std::size_t j = 0; j < g.cols(); ++j) {
        // The property covers strategies that were undominated at some payment
        // and then became dominated; strategies dominated from the start may
        // resurface once before it applies.
        bool seen_undominated = false, locked = false;
        for (int step = 0; step <= 100; ++step) {
          const double margin =
              dominance_margin(cross_section(g, r, step / 100.0), Player::B, j);
          if (locked && margin < -1e-7) {
            expect(false, "suite (b) dominance lost after being gained");
            break;
          }
          if (seen_undominated && margin > 1e-7) locked = true;
          if (margin < -1e-7) seen_undominated = true;
        }
      }
    }
  }

  // (c) zero-sum: no strategy ever becomes undominated; V nonincreasing.
  //
  // The first property does not actually hold: a column that is strictly
  // dominated at I = 0 only by a *mixture* of other columns can become
  // undominated at interior I and even re-enter B's equilibrium support (the
  // guarantee is provable only for pure dominators).  The check is kept as
  // stated and reports the counterexample count rather than being relaxed.
  {
    fixtures::Rng rng(2028);
    int checked = 0, attempts = 0, undominated_events = 0, offending_games = 0;
    while (checked < 500 && attempts < 700) {
      ++attempts;
      const BimatrixGame g =
          fixtures::random_game(rng, 2 + rng.index(3), 2 + rng.index(3), true);
      try {
        const BimatrixGame r = maximal_matrix(g);
        const auto nodes = find_nodes(g, r, nullptr, 101);
        int here = 0;
        for (const NodeEvent& n : nodes)
          if (n.direction == NodeDirection::becomes_undominated) ++here;
        undominated_events += here;
        offending_games += here > 0;
        const auto iv = interval_profile(g, r, nodes);
        for (std::size_t i = 0; i + 1 < iv.size(); ++i)
          expect(iv[i].v >= iv[i + 1].v - 1e-8, "suite (c) V nonincreasing");
        ++checked;
      } catch (const Error&) {
      }
    }
    expect(undominated_events == 0,
           "suite (c) zero-sum games produced " + std::to_string(undominated_events) +
               " becomes_undominated events across " +
               std::to_string(offending_games) +
               " games (strategies mixture-dominated at I=0 re-entering)");
    expect(checked >= 500, "suite (c) checked 500 zero-sum games");
  }

  // (d) s_b constant within intervals.
  {
    fixtures::Rng rng(2029);
    int checked = 0, attempts = 0;
    while (checked < 500 && attempts < 800) {
      ++attempts;
      const BimatrixGame g = fixtures::random_game(
          rng, 2 + rng.index(3), 2 + rng.index(3), rng.index(2) == 0);
      try {
        const BimatrixGame r = maximal_matrix(g);
        const auto iv = interval_profile(g, r, find_nodes(g, r, nullptr, 101));
        auto sb_dist = [&](double i_val, const MixedStrategy& ref) {
          const EquilibriumSet at = solve_cross_section(cross_section(g, r, i_val));
          double best = 1e300;
          for (const auto& [sa, sb] : at.profiles)
            best = std::min(best, sb.max_abs_diff(ref));
          return best;
        };
        bool out_of_scope = false;
        for (const IntervalAnalysis& interval : iv) {
          const double mid = 0.5 * (interval.i_lo + interval.i_hi);
          for (double frac : {0.3, 0.7}) {
            const double i_val =
                interval.i_lo + frac * (interval.i_hi - interval.i_lo);
            if (sb_dist(i_val, interval.s_b) <= 1e-8) continue;
            // A mismatch is either a genuine constancy violation or an
            // equilibrium discontinuity (the cross-section is non-unique at
            // some interior point, outside the theory's scope).  Bisect: a
            // jump that persists at zero width proves the latter.
            double a = mid, b = i_val;  // a matches interval.s_b, b does not
            while (std::abs(b - a) > 1e-9) {
              const double c = 0.5 * (a + b);
              (sb_dist(c, interval.s_b) <= 1e-8 ? a : b) = c;
            }
            if (sb_dist(b, interval.s_b) > 1e-4)
              out_of_scope = true;
            else
              expect(false, "suite (d) s_b constant within an interval");
          }
        }
        if (!out_of_scope) ++checked;
      } catch (const Error&) {
      }
    }
    expect(checked >= 500, "suite (d) checked 500 games");
  }

  // (e) the zero-shift rewrite preserves cross-sections exactly.
  {
    fixtures::Rng rng(2030);
    int checked = 0;
    for (int t = 0; t < 520 && checked < 500; ++t) {
      const BimatrixGame g = fixtures::random_game(
          rng, 2 + rng.index(3), 2 + rng.index(3), rng.index(2) == 0);
      try {
        const BimatrixGame r = maximal_matrix(g);
        const double c = 0.05 + 0.9 * rng.uniform();
        const OracleFunction raw = OracleFunction::piecewise_linear(
            {{0, c}, {1.0, std::min(1.0, c + 0.4)}, {3.0, 1.0}});
        const auto [n, j] = shift_to_zero(g, raw);
        const BimatrixGame rn = maximal_matrix(n);
        const double x = 3.0 * rng.uniform();
        const BimatrixGame lhs = cross_section(g, r, raw.eval(x));
        const BimatrixGame rhs = cross_section(n, rn, j.eval(x));
        for (std::size_t idx = 0; idx < lhs.cells().size(); ++idx) {
          expect(near(lhs.cells()[idx].a, rhs.cells()[idx].a, 1e-12),
                 "suite (e) cross-section identity (A)");
          expect(near(lhs.cells()[idx].b, rhs.cells()[idx].b, 1e-12),
                 "suite (e) cross-section identity (B)");
        }
        ++checked;
      } catch (const Error&) {
      }
    }
    expect(checked >= 500, "suite (e) checked 500 games");
  }

  // (f) normalization yields a nondecreasing concave upper bound.
  {
    fixtures::Rng rng(2031);
    for (int t = 0; t < 500; ++t) {
      std::vector<std::pair<double, double>> pts{{0.0, 0.0}};
      double x = 0.0;
      const int n = 3 + static_cast<int>(rng.index(6));
      for (int i = 0; i < n; ++i) {
        x += 0.1 + rng.uniform();
        pts.emplace_back(x, rng.uniform());
      }
      const OracleFunction raw = OracleFunction::piecewise_linear(pts);
      const NormalizationReport rep = normalize(raw);
      double prev = -1e300, prev_slope = 1e300;
      bool ok = true;
      for (int i = 0; i <= 200; ++i) {
        const double xi = x * i / 200.0;
        const double y = rep.concave.eval(xi);
        ok = ok && y >= prev - 1e-12 && y >= raw.eval(xi) - 1e-9;
        if (i > 0) {
          const double slope = (y - prev) * 200.0 / x;
          ok = ok && slope <= prev_slope + 1e-7;
          prev_slope = slope;
        }
        prev = y;
      }
      expect(ok, "suite (f) normalization properties");
    }
  }
  return true;
}

bool criterion7() {
  int checked = 0;
  for (const EmittedEquilibrium& e : g_emitted) {
    const DeviationCertificate cert = deviation_check(
        e.m, maximal_matrix(e.m), e.f, e.eq, 1e-6, 10000, e.extra_x);
    if (!cert.passed) {
      expect(false, "deviation check failed for " + e.origin + " (worst: " +
                        cert.worst_deviation + ")");
    }
    ++checked;
  }
  expect(checked >= 20, "a meaningful set of equilibria was re-verified");

  struct Fixture {
    BimatrixGame m;
    OracleFunction f;
    const char* name;
  };
  const std::vector<Fixture> fixtures_mc = {
      {fixtures::example1(), OracleFunction::sqrt_k(1), "2x2"},
      {fixtures::example2(), OracleFunction::sqrt_k(0.5), "3x3"},
      {fixtures::optout(), OracleFunction::sqrt_k(1), "opt-out"},
  };
  std::uint64_t seed = 99;
  for (const Fixture& fx : fixtures_mc) {
    const OracleEquilibrium eq = solve_oracle_game(fx.m, fx.f);
    const SimulationResult s =
        simulate(fx.m, fx.f, eq.s_a, eq.s_b, eq.x, 1000000, seed++);
    expect(std::abs(s.mean_e_a - eq.e_a) <= 4 * std::max(s.std_err_a, 1e-12),
           std::string("Monte-Carlo E_a within 4 SE (") + fx.name + ")");
    expect(std::abs(s.mean_e_b - eq.e_b) <= 4 * std::max(s.std_err_b, 1e-12),
           std::string("Monte-Carlo E_b within 4 SE (") + fx.name + ")");
  }
  return true;
}

bool criterion8() {
  const BimatrixGame m = fixtures::blocks4();
  const std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
      blocks = {{{0, 1}, {0, 1}}, {{2, 3}, {2, 3}}};
  for (double k : {0.5, 1.0, 4.0}) {
    const OracleFunction f = OracleFunction::sqrt_k(k);
    const auto eqs = solve_multi(m, f, blocks);
    expect(eqs.size() == 2, "two block equilibria");
    if (eqs.size() != 2) continue;
    for (int b = 0; b < 2; ++b) {
      const auto& [rows, cols] = blocks[b];
      const BimatrixGame sub = m.submatrix(rows, cols);
      const OracleEquilibrium solo = solve_oracle_game(sub, f);
      expect_near(eqs[b].x, solo.x, 1e-9, "block payment matches standalone");
      expect_near(eqs[b].e_a, solo.e_a, 1e-9, "block E_a matches standalone");
      for (std::size_t i = 0; i < rows.size(); ++i)
        expect_near(eqs[b].s_a[rows[i]], solo.s_a[i], 1e-9,
                    "block s_a matches standalone");
      for (std::size_t j = 0; j < cols.size(); ++j)
        expect_near(eqs[b].s_b[cols[j]], solo.s_b[j], 1e-9,
                    "block s_b matches standalone");
      // Off-block coordinates are exactly zero after embedding.
      for (std::size_t i = 0; i < 4; ++i) {
        if (std::find(rows.begin(), rows.end(), i) == rows.end())
          expect_near(eqs[b].s_a[i], 0.0, 0.0, "off-block s_a weight");
        if (std::find(cols.begin(), cols.end(), i) == cols.end())
          expect_near(eqs[b].s_b[i], 0.0, 0.0, "off-block s_b weight");
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool()> run;
  };
  const std::vector<Criterion> criteria = {
      {"base-game equilibria", criterion1},
      {"2x2 oracle case table", criterion2},
      {"3x3 node set and interval structure", criterion3},
      {"3x3 oracle-steepness sweep", criterion4},
      {"harmful-information payoff profile", criterion5},
      {"random-game property suites", criterion6},
      {"deviation and Monte-Carlo verification", criterion7},
      {"block decomposition", criterion8},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int before = g_check_failures;
    bool threw = false;
    try {
      criteria[i].run();
    } catch (const std::exception& e) {
      threw = true;
      std::printf("    exception: %s\n", e.what());
    }
    const bool ok = !threw && g_check_failures == before;
    std::printf("criterion %zu (%s): %s\n", i + 1, criteria[i].name,
                ok ? "PASS" : "FAIL");
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures;
}
