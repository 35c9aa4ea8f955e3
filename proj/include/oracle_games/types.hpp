#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "oracle_games/errors.hpp"

namespace oracle_games {

// Shared tolerances.
inline constexpr double kProbTol = 1e-9;     // probability normalization
inline constexpr double kSupportTol = 1e-9;  // support membership threshold

enum class Player { A, B };

struct PayoffPair {
  double a = 0.0;  // payoff to the (potentially informed) row player A
  double b = 0.0;  // payoff to the column player B
};

/// Probability vector over one player's pure strategies.
class MixedStrategy {
 public:
  MixedStrategy() = default;  // empty placeholder; fill before use
  explicit MixedStrategy(std::vector<double> probs);
  static MixedStrategy pure(std::size_t n, std::size_t index);
  static MixedStrategy uniform(std::size_t n);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  std::vector<std::size_t> support(double tol = kSupportTol) const;

  /// p * this + (1-p) * other.
  MixedStrategy mix(double p, const MixedStrategy& other) const;

  double max_abs_diff(const MixedStrategy& other) const;

 private:
  std::vector<double> probs_;
};

/// m x n grid of payoff pairs.  Used both for the game matrix M and for the
/// maximal matrix R (payoffs under an oracle response).
class BimatrixGame {
 public:
  BimatrixGame(std::size_t rows, std::size_t cols, std::vector<PayoffPair> cells,
               std::vector<std::string> row_labels = {},
               std::vector<std::string> col_labels = {});
  static BimatrixGame from_rows(const std::vector<std::vector<PayoffPair>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PayoffPair& at(std::size_t i, std::size_t j) const {
    return cells_[i * cols_ + j];
  }
  const std::vector<PayoffPair>& cells() const { return cells_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  bool same_shape(const BimatrixGame& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  /// Every payoff-improving change for one player strictly hurts the other
  /// (ties must tie for both).  Zero-sum games qualify.
  bool is_strictly_competitive(double tol = 1e-12) const;

  double max_a_payoff() const;
  double min_a_payoff() const;

  /// Restriction to a subset of rows and columns (order preserved).
  BimatrixGame submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<PayoffPair> cells_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

/// alpha[j] = row index of A's best response to column j.
struct BestResponseMap {
  std::vector<std::size_t> alpha;
};

}  // namespace oracle_games
