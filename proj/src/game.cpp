#include "oracle_games/game.hpp"

#include <cmath>
#include <string>

namespace oracle_games {

namespace {

void check_profile_dims(const BimatrixGame& game, const MixedStrategy& s_a,
                        const MixedStrategy& s_b) {
  if (s_a.size() != game.rows() || s_b.size() != game.cols())
    throw DimensionMismatch("strategy length does not match game shape");
}

}  // namespace

BestResponseMap best_response_indices(const BimatrixGame& game) {
  BestResponseMap out;
  out.alpha.resize(game.cols());
  for (std::size_t j = 0; j < game.cols(); ++j) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < game.rows(); ++i) {
      const PayoffPair& cand = game.at(i, j);
      const PayoffPair& cur = game.at(best, j);
      if (cand.a > cur.a) {
        best = i;
      } else if (cand.a == cur.a && cand.b != cur.b) {
        // A tie that changes R depending on which row is chosen.
        throw AmbiguousBestResponse(
            "column " + std::to_string(j) +
            ": two rows tie on A's payoff but differ in B's payoff");
      }
    }
    out.alpha[j] = best;
  }
  return out;
}

BimatrixGame maximal_matrix(const BimatrixGame& game) {
  const BestResponseMap br = best_response_indices(game);
  std::vector<PayoffPair> cells(game.rows() * game.cols());
  for (std::size_t j = 0; j < game.cols(); ++j) {
    const PayoffPair& top = game.at(br.alpha[j], j);
    for (std::size_t i = 0; i < game.rows(); ++i) cells[i * game.cols() + j] = top;
  }
  return BimatrixGame(game.rows(), game.cols(), std::move(cells), game.row_labels(),
                      game.col_labels());
}

BimatrixGame cross_section(const BimatrixGame& m, const BimatrixGame& r, double i_val) {
  if (!m.same_shape(r)) throw ShapeMismatch("M and R have different shapes");
  if (!(i_val >= 0.0 && i_val <= 1.0))
    throw Error("cross-section blend outside [0, 1]: " + std::to_string(i_val));
  if (i_val == 0.0) return m;
  if (i_val == 1.0) return r;
  std::vector<PayoffPair> cells(m.rows() * m.cols());
  const double w = 1.0 - i_val;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    cells[k].a = w * m.cells()[k].a + i_val * r.cells()[k].a;
    cells[k].b = w * m.cells()[k].b + i_val * r.cells()[k].b;
  }
  return BimatrixGame(m.rows(), m.cols(), std::move(cells), m.row_labels(),
                      m.col_labels());
}

PayoffPair expected_payoffs(const BimatrixGame& game, const MixedStrategy& s_a,
                            const MixedStrategy& s_b) {
  check_profile_dims(game, s_a, s_b);
  PayoffPair out;
  for (std::size_t i = 0; i < game.rows(); ++i) {
    if (s_a[i] == 0.0) continue;
    double row_a = 0.0, row_b = 0.0;
    for (std::size_t j = 0; j < game.cols(); ++j) {
      row_a += s_b[j] * game.at(i, j).a;
      row_b += s_b[j] * game.at(i, j).b;
    }
    out.a += s_a[i] * row_a;
    out.b += s_a[i] * row_b;
  }
  return out;
}

double response_payoff(const BimatrixGame& r, const MixedStrategy& s_b) {
  if (s_b.size() != r.cols()) throw DimensionMismatch("s_b length does not match columns");
  for (std::size_t i = 1; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (std::abs(r.at(i, j).a - r.at(0, j).a) > 1e-12 ||
          std::abs(r.at(i, j).b - r.at(0, j).b) > 1e-12)
        throw NotMaximalMatrix("rows differ; not a maximal matrix");
  double e_r = 0.0;
  for (std::size_t j = 0; j < r.cols(); ++j) e_r += s_b[j] * r.at(0, j).a;
  return e_r;
}

double value_of_information(const BimatrixGame& m, const BimatrixGame& r,
                            const MixedStrategy& s_a, const MixedStrategy& s_b) {
  if (!m.same_shape(r)) throw ShapeMismatch("M and R have different shapes");
  check_profile_dims(m, s_a, s_b);
  const double e_r = response_payoff(r, s_b);
  const double e_n = expected_payoffs(m, s_a, s_b).a;
  const double v = e_r - e_n;
  if (v < -1e-9)
    throw InternalError("value of information below -1e-9: " + std::to_string(v));
  return v;
}

PayoffPair full_payoff(const BimatrixGame& m, const BimatrixGame& r,
                       const MixedStrategy& s_a, const MixedStrategy& s_b,
                       double i_val, double x) {
  if (x < 0.0) throw NegativePayment("oracle payment must be nonnegative");
  if (!(i_val >= 0.0 && i_val <= 1.0)) throw Error("response probability outside [0, 1]");
  if (!m.same_shape(r)) throw ShapeMismatch("M and R have different shapes");
  check_profile_dims(m, s_a, s_b);
  const PayoffPair silent = expected_payoffs(m, s_a, s_b);
  // B's payoff under a response depends only on s_b (rows of R are identical).
  double resp_a = 0.0, resp_b = 0.0;
  for (std::size_t j = 0; j < r.cols(); ++j) {
    resp_a += s_b[j] * r.at(0, j).a;
    resp_b += s_b[j] * r.at(0, j).b;
  }
  PayoffPair out;
  out.a = silent.a * (1.0 - i_val) + resp_a * i_val - x;
  out.b = silent.b * (1.0 - i_val) + resp_b * i_val;
  return out;
}

}  // namespace oracle_games
