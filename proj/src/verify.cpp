#include "oracle_games/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oracle_games/errors.hpp"
#include "oracle_games/game.hpp"

namespace oracle_games {

namespace {

double row_payoff_a(const BimatrixGame& m, std::size_t i, const MixedStrategy& s_b) {
  double v = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) v += s_b[j] * m.at(i, j).a;
  return v;
}

double col_payoff_b(const BimatrixGame& m, const MixedStrategy& s_a, std::size_t j) {
  double v = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) v += s_a[i] * m.at(i, j).b;
  return v;
}

struct Kahan {
  double sum = 0.0, carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::size_t draw(const std::vector<double>& cdf, double u) {
  for (std::size_t i = 0; i + 1 < cdf.size(); ++i)
    if (u < cdf[i]) return i;
  return cdf.size() - 1;
}

}  // namespace

DeviationCertificate deviation_check(const BimatrixGame& m, const BimatrixGame& r,
                                     const OracleFunction& f,
                                     const OracleEquilibrium& eq, double epsilon,
                                     std::size_t x_grid,
                                     const std::vector<double>& extra_x) {
  DeviationCertificate cert;
  cert.epsilon = epsilon;

  const double i_eq = f.eval(eq.x);
  const double e_r = response_payoff(r, eq.s_b);
  const double e_n = expected_payoffs(m, eq.s_a, eq.s_b).a;
  const double cur_a = (1.0 - i_eq) * e_n + i_eq * e_r - eq.x;
  const double cur_b = full_payoff(m, r, eq.s_a, eq.s_b, i_eq, eq.x).b;

  // (i) A switches rows, payment fixed.  The oracle-response share of A's
  // payoff does not depend on the tentative row.
  std::string worst = "none";
  double worst_gain = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double gain = (1.0 - i_eq) * (row_payoff_a(m, i, eq.s_b) - e_n);
    if (gain > cert.max_gain_a_strategy) cert.max_gain_a_strategy = gain;
    if (gain > worst_gain) {
      worst_gain = gain;
      worst = "A switches to row " + std::to_string(i);
    }
  }

  // (ii) A changes the payment, rows re-optimized per candidate.
  double x_hi = std::max(f.saturation_x(), eq.x);
  if (f.x_cap()) x_hi = std::max(x_hi, *f.x_cap());
  std::vector<double> xs;
  xs.reserve(x_grid + extra_x.size() + 8);
  for (std::size_t g = 0; g <= x_grid; ++g)
    xs.push_back(x_hi * static_cast<double>(g) / static_cast<double>(x_grid));
  xs.push_back(0.0);
  xs.push_back(eq.x);
  xs.push_back(eq.x_multiplicity_lo);
  xs.push_back(eq.x_multiplicity_hi);
  xs.push_back(f.saturation_x());
  for (double e : extra_x) xs.push_back(e);
  const double v = value_of_information(m, r, eq.s_a, eq.s_b);
  if (v > 1e-12) {
    try {
      const SlopeInterval si = f.slope_x(1.0 / v);
      xs.push_back(si.lo);
      xs.push_back(si.hi);
    } catch (const SlopeOutOfRange& e) {
      xs.push_back(e.fallback_x());
    }
  }
  for (const auto& [px, py] : f.points()) xs.push_back(px);

  double best_alt = e_n;
  for (std::size_t i = 0; i < m.rows(); ++i)
    best_alt = std::max(best_alt, row_payoff_a(m, i, eq.s_b));
  for (double cx : xs) {
    if (cx < 0.0 || cx > x_hi + 1e-12) continue;
    const double ic = f.eval(std::min(cx, x_hi));
    const double pay = (1.0 - ic) * best_alt + ic * e_r - cx;
    const double gain = pay - cur_a;
    if (gain > cert.max_gain_a_payment) {
      cert.max_gain_a_payment = gain;
      if (gain > worst_gain) {
        worst_gain = gain;
        worst = cx > eq.x ? "A raises the payment to x = " + std::to_string(cx)
                          : "A reduces the payment to x = " + std::to_string(cx);
      }
    }
  }

  // (iii) B switches columns; B's payoff blends the base and response cells.
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const double pay = (1.0 - i_eq) * col_payoff_b(m, eq.s_a, j) + i_eq * r.at(0, j).b;
    const double gain = pay - cur_b;
    if (gain > cert.max_gain_b) cert.max_gain_b = gain;
    if (gain > worst_gain) {
      worst_gain = gain;
      worst = "B switches to column " + std::to_string(j);
    }
  }

  cert.passed = cert.max_gain_a_strategy <= epsilon &&
                cert.max_gain_a_payment <= epsilon && cert.max_gain_b <= epsilon;
  cert.worst_deviation = cert.passed ? "none" : worst;
  return cert;
}

SimulationResult simulate(const BimatrixGame& m, const OracleFunction& f,
                          const MixedStrategy& s_a, const MixedStrategy& s_b, double x,
                          std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw EmptyInput("simulate needs at least one trial");
  if (x < 0.0) throw NegativePayment("payment must be nonnegative");
  if (s_a.size() != m.rows() || s_b.size() != m.cols())
    throw DimensionMismatch("strategy lengths do not match the game");

  const BestResponseMap br = best_response_indices(m);
  const double i_val = f.eval(x);

  std::vector<double> cdf_a(m.rows()), cdf_b(m.cols());
  double acc = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) cdf_a[i] = (acc += s_a[i]);
  acc = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) cdf_b[j] = (acc += s_b[j]);

  SplitMix64 rng(seed);
  Kahan sum_a, sum_b, sum_a2, sum_b2;
  std::uint64_t responses = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::size_t j = draw(cdf_b, rng.uniform());
    const bool responded = rng.uniform() < i_val;
    std::size_t i;
    if (responded) {
      ++responses;
      i = br.alpha[j];
    } else {
      i = draw(cdf_a, rng.uniform());
    }
    const double pa = m.at(i, j).a - x;
    const double pb = m.at(i, j).b;
    sum_a.add(pa);
    sum_b.add(pb);
    sum_a2.add(pa * pa);
    sum_b2.add(pb * pb);
  }

  SimulationResult res;
  res.trials = trials;
  res.seed = seed;
  const double n = static_cast<double>(trials);
  res.mean_e_a = sum_a.sum / n;
  res.mean_e_b = sum_b.sum / n;
  res.std_err_a = std::sqrt(std::max(0.0, sum_a2.sum / n - res.mean_e_a * res.mean_e_a) / n);
  res.std_err_b = std::sqrt(std::max(0.0, sum_b2.sum / n - res.mean_e_b * res.mean_e_b) / n);
  res.response_rate = static_cast<double>(responses) / n;
  return res;
}

}  // namespace oracle_games
