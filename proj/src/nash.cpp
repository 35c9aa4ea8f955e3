#include "oracle_games/nash.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "oracle_games/errors.hpp"
#include "oracle_games/game.hpp"
#include "oracle_games/lp.hpp"

namespace oracle_games {

namespace {

constexpr double kDomTol = 1e-9;
constexpr std::size_t kMaxSide = 12;

// Gap matrix for dominance of `strategy`: one row per candidate replacement
// strategy of `player`, one column per opponent pure strategy.  Entry =
// payoff(replacement) - payoff(strategy).
struct GapProgram {
  std::vector<std::size_t> others;       // player's strategies excluding `strategy`
  std::vector<std::vector<double>> gap;  // others.size() x n_opp
  std::size_t n_opp = 0;
};

GapProgram build_gaps(const BimatrixGame& game, Player player, std::size_t strategy) {
  GapProgram gp;
  if (player == Player::B) {
    if (strategy >= game.cols()) throw DimensionMismatch("strategy index out of range");
    gp.n_opp = game.rows();
    for (std::size_t j = 0; j < game.cols(); ++j)
      if (j != strategy) gp.others.push_back(j);
    for (std::size_t o : gp.others) {
      std::vector<double> row(gp.n_opp);
      for (std::size_t i = 0; i < gp.n_opp; ++i)
        row[i] = game.at(i, o).b - game.at(i, strategy).b;
      gp.gap.push_back(std::move(row));
    }
  } else {
    if (strategy >= game.rows()) throw DimensionMismatch("strategy index out of range");
    gp.n_opp = game.cols();
    for (std::size_t i = 0; i < game.rows(); ++i)
      if (i != strategy) gp.others.push_back(i);
    for (std::size_t o : gp.others) {
      std::vector<double> row(gp.n_opp);
      for (std::size_t c = 0; c < gp.n_opp; ++c)
        row[c] = game.at(o, c).a - game.at(strategy, c).a;
      gp.gap.push_back(std::move(row));
    }
  }
  return gp;
}

MixedStrategy embed_witness(const std::vector<std::size_t>& others,
                            const std::vector<double>& weights, std::size_t full_size,
                            std::size_t strategy) {
  std::vector<double> p(full_size, 0.0);
  double total = 0.0;
  for (double w : weights) total += std::max(0.0, w);
  if (total <= 0.0) total = 1.0;
  for (std::size_t o = 0; o < others.size(); ++o)
    p[others[o]] = std::max(0.0, weights[o]) / total;
  p[strategy] = 0.0;
  return MixedStrategy(p);
}

// Maximin over mixtures sigma of the other strategies of the minimum gap.
// Variables: sigma (p of them), t+, t-; maximize t+ - t- subject to
//   t+ - t- - sigma . gap_col <= 0 for every opponent column, sum sigma = 1.
lp::Result maximin_program(const GapProgram& gp) {
  const std::size_t p = gp.others.size();
  std::vector<double> obj(p + 2, 0.0);
  obj[p] = 1.0;
  obj[p + 1] = -1.0;
  std::vector<lp::Constraint> cons;
  for (std::size_t c = 0; c < gp.n_opp; ++c) {
    lp::Constraint cn;
    cn.coeffs.assign(p + 2, 0.0);
    for (std::size_t o = 0; o < p; ++o) cn.coeffs[o] = -gp.gap[o][c];
    cn.coeffs[p] = 1.0;
    cn.coeffs[p + 1] = -1.0;
    cn.rel = lp::Relation::le;
    cn.rhs = 0.0;
    cons.push_back(std::move(cn));
  }
  lp::Constraint sum1;
  sum1.coeffs.assign(p + 2, 0.0);
  for (std::size_t o = 0; o < p; ++o) sum1.coeffs[o] = 1.0;
  sum1.rel = lp::Relation::eq;
  sum1.rhs = 1.0;
  cons.push_back(std::move(sum1));
  return lp::maximize(obj, cons);
}

double min_gap(const GapProgram& gp, const std::vector<double>& sigma) {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < gp.n_opp; ++c) {
    double g = 0.0;
    for (std::size_t o = 0; o < gp.others.size(); ++o) g += sigma[o] * gp.gap[o][c];
    worst = std::min(worst, g);
  }
  return worst;
}

std::vector<std::vector<std::size_t>> supports_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Mixture of the opponent making every support strategy of `player` payoff
// equal, solved as a k x k linear system.  Returns nullopt when the system is
// singular or the solution leaves the simplex.
std::optional<std::vector<double>> indifference_mix(const BimatrixGame& game, Player player,
                                                    const std::vector<std::size_t>& own,
                                                    const std::vector<std::size_t>& opp) {
  const std::size_t k = own.size();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(k, k);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k);
  auto pay = [&](std::size_t own_s, std::size_t opp_s) {
    return player == Player::A ? game.at(own_s, opp_s).a : game.at(opp_s, own_s).b;
  };
  for (std::size_t r = 0; r + 1 < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      A(r, c) = pay(own[r], opp[c]) - pay(own[r + 1], opp[c]);
  for (std::size_t c = 0; c < k; ++c) A(k - 1, c) = 1.0;
  rhs(k - 1) = 1.0;

  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  if (!lu.isInvertible()) return std::nullopt;
  Eigen::VectorXd q = lu.solve(rhs);
  if ((A * q - rhs).lpNorm<Eigen::Infinity>() > 1e-8) return std::nullopt;
  std::vector<double> out(k);
  for (std::size_t c = 0; c < k; ++c) {
    if (q(c) < -1e-7) return std::nullopt;
    out[c] = std::max(0.0, q(c));
  }
  double total = 0.0;
  for (double v : out) total += v;
  if (std::abs(total - 1.0) > 1e-6) return std::nullopt;
  for (double& v : out) v /= total;
  return out;
}

MixedStrategy expand(const std::vector<std::size_t>& support,
                     const std::vector<double>& weights, std::size_t full_size) {
  std::vector<double> p(full_size, 0.0);
  for (std::size_t i = 0; i < support.size(); ++i) p[support[i]] = weights[i];
  return MixedStrategy(p);
}

bool is_best_response_pair(const BimatrixGame& game, const MixedStrategy& s_a,
                           const MixedStrategy& s_b) {
  const auto [ea, eb] = expected_payoffs(game, s_a, s_b);
  for (std::size_t i = 0; i < game.rows(); ++i) {
    double v = 0.0;
    for (std::size_t j = 0; j < game.cols(); ++j) v += s_b[j] * game.at(i, j).a;
    if (v > ea + kSupportTol) return false;
  }
  for (std::size_t j = 0; j < game.cols(); ++j) {
    double v = 0.0;
    for (std::size_t i = 0; i < game.rows(); ++i) v += s_a[i] * game.at(i, j).b;
    if (v > eb + kSupportTol) return false;
  }
  return true;
}

}  // namespace

double dominance_margin(const BimatrixGame& game, Player player, std::size_t strategy) {
  const GapProgram gp = build_gaps(game, player, strategy);
  if (gp.others.empty()) return -std::numeric_limits<double>::infinity();
  const lp::Result res = maximin_program(gp);
  if (res.status != lp::Result::Status::optimal)
    throw InternalError("dominance program did not solve");
  return res.objective;
}

DominanceReport dominance_status(const BimatrixGame& game, Player player,
                                 std::size_t strategy) {
  DominanceReport rep;
  rep.player = player;
  rep.strategy = strategy;
  const std::size_t full = player == Player::B ? game.cols() : game.rows();
  const GapProgram gp = build_gaps(game, player, strategy);
  if (gp.others.empty()) {
    rep.status = DominanceStatus::undominated;
    rep.witness = MixedStrategy::pure(full, strategy);
    rep.margin = -std::numeric_limits<double>::infinity();
    return rep;
  }

  const lp::Result mm = maximin_program(gp);
  if (mm.status != lp::Result::Status::optimal)
    throw InternalError("dominance program did not solve");
  const std::size_t p = gp.others.size();
  std::vector<double> sigma(mm.x.begin(), mm.x.begin() + p);
  rep.margin = mm.objective;
  rep.witness = embed_witness(gp.others, sigma, full, strategy);

  if (mm.objective > kDomTol) {
    rep.status = DominanceStatus::strictly_dominated;
    return rep;
  }
  if (mm.objective < -kDomTol) {
    rep.status = DominanceStatus::undominated;
    return rep;
  }

  // Margin ~ 0: weakly dominated iff some mixture has all gaps >= 0 and a
  // strictly positive total gap.  Maximize the total gap subject to every
  // individual gap being nonnegative.
  std::vector<double> obj(p, 0.0);
  for (std::size_t o = 0; o < p; ++o)
    for (std::size_t c = 0; c < gp.n_opp; ++c) obj[o] += gp.gap[o][c];
  std::vector<lp::Constraint> cons;
  for (std::size_t c = 0; c < gp.n_opp; ++c) {
    lp::Constraint cn;
    cn.coeffs.assign(p, 0.0);
    for (std::size_t o = 0; o < p; ++o) cn.coeffs[o] = -gp.gap[o][c];
    cn.rel = lp::Relation::le;
    cn.rhs = kDomTol;
    cons.push_back(std::move(cn));
  }
  lp::Constraint sum1;
  sum1.coeffs.assign(p, 1.0);
  sum1.rel = lp::Relation::eq;
  sum1.rhs = 1.0;
  cons.push_back(std::move(sum1));
  const lp::Result tg = lp::maximize(obj, cons);
  if (tg.status == lp::Result::Status::optimal && tg.objective > 1e-8) {
    rep.status = DominanceStatus::weakly_dominated;
    std::vector<double> w(tg.x.begin(), tg.x.begin() + p);
    rep.witness = embed_witness(gp.others, w, full, strategy);
    rep.margin = min_gap(gp, w);
  } else {
    rep.status = DominanceStatus::undominated;
  }
  return rep;
}

EquilibriumSet solve_cross_section(const BimatrixGame& game) {
  if (game.rows() > kMaxSide || game.cols() > kMaxSide)
    throw TooLarge("support enumeration limited to 12x12 games");

  EquilibriumSet out;
  const std::size_t kmax = std::min(game.rows(), game.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    const auto row_supports = supports_of_size(game.rows(), k);
    const auto col_supports = supports_of_size(game.cols(), k);
    for (const auto& sa : row_supports) {
      for (const auto& sb : col_supports) {
        std::optional<std::vector<double>> q, sg;
        if (k == 1) {
          q.emplace(std::vector<double>{1.0});
          sg.emplace(std::vector<double>{1.0});
        } else {
          q = indifference_mix(game, Player::A, sa, sb);
          if (!q) continue;
          sg = indifference_mix(game, Player::B, sb, sa);
          if (!sg) continue;
        }
        const MixedStrategy s_a = expand(sa, *sg, game.rows());
        const MixedStrategy s_b = expand(sb, *q, game.cols());
        if (!is_best_response_pair(game, s_a, s_b)) continue;
        bool dup = false;
        for (const auto& [ea, eb] : out.profiles)
          if (ea.max_abs_diff(s_a) <= 1e-8 && eb.max_abs_diff(s_b) <= 1e-8) {
            dup = true;
            break;
          }
        if (!dup) out.profiles.emplace_back(s_a, s_b);
      }
    }
  }

  if (out.profiles.empty()) throw NoEquilibriumFound("no equilibrium located by support enumeration");
  std::sort(out.profiles.begin(), out.profiles.end(), [](const auto& l, const auto& r) {
    for (std::size_t i = 0; i < l.first.size(); ++i)
      if (l.first[i] != r.first[i]) return l.first[i] > r.first[i];
    for (std::size_t j = 0; j < l.second.size(); ++j)
      if (l.second[j] != r.second[j]) return l.second[j] > r.second[j];
    return false;
  });
  out.unique = out.profiles.size() == 1;
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> pure_equilibria(const BimatrixGame& game) {
  constexpr double tol = 1e-12;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < game.rows(); ++i) {
    for (std::size_t j = 0; j < game.cols(); ++j) {
      bool best = true;
      for (std::size_t r = 0; r < game.rows() && best; ++r)
        if (game.at(r, j).a > game.at(i, j).a + tol) best = false;
      for (std::size_t c = 0; c < game.cols() && best; ++c)
        if (game.at(i, c).b > game.at(i, j).b + tol) best = false;
      if (best) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace oracle_games
