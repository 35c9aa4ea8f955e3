#include "oracle_games/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oracle_games {

MixedStrategy::MixedStrategy(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw EmptyInput("mixed strategy must have at least one entry");
  double sum = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p)) throw Error("mixed strategy entry not finite");
    if (p < -kProbTol || p > 1.0 + kProbTol)
      throw Error("mixed strategy entry outside [0, 1]: " + std::to_string(p));
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbTol)
    throw Error("mixed strategy does not sum to 1: " + std::to_string(sum));
  // Clean up roundoff so downstream arithmetic sees exact probabilities.
  for (double& p : probs_) p = std::clamp(p, 0.0, 1.0);
}

MixedStrategy MixedStrategy::pure(std::size_t n, std::size_t index) {
  if (index >= n) throw DimensionMismatch("pure strategy index out of range");
  std::vector<double> v(n, 0.0);
  v[index] = 1.0;
  return MixedStrategy(std::move(v));
}

MixedStrategy MixedStrategy::uniform(std::size_t n) {
  if (n == 0) throw EmptyInput("uniform strategy over zero strategies");
  return MixedStrategy(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

std::vector<std::size_t> MixedStrategy::support(double tol) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < probs_.size(); ++i)
    if (probs_[i] > tol) out.push_back(i);
  return out;
}

MixedStrategy MixedStrategy::mix(double p, const MixedStrategy& other) const {
  if (size() != other.size()) throw DimensionMismatch("mixing strategies of different size");
  std::vector<double> v(size());
  for (std::size_t i = 0; i < size(); ++i)
    v[i] = p * probs_[i] + (1.0 - p) * other.probs_[i];
  return MixedStrategy(std::move(v));
}

double MixedStrategy::max_abs_diff(const MixedStrategy& other) const {
  if (size() != other.size()) throw DimensionMismatch("comparing strategies of different size");
  double d = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    d = std::max(d, std::abs(probs_[i] - other.probs_[i]));
  return d;
}

BimatrixGame::BimatrixGame(std::size_t rows, std::size_t cols,
                           std::vector<PayoffPair> cells,
                           std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels)
    : rows_(rows),
      cols_(cols),
      cells_(std::move(cells)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (rows_ == 0 || cols_ == 0) throw ShapeMismatch("game must have at least one row and column");
  if (cells_.size() != rows_ * cols_)
    throw ShapeMismatch("cell count does not match rows x cols");
  for (const PayoffPair& c : cells_)
    if (!std::isfinite(c.a) || !std::isfinite(c.b))
      throw Error("payoff matrix contains a non-finite entry");
  if (!row_labels_.empty() && row_labels_.size() != rows_)
    throw ShapeMismatch("row label count mismatch");
  if (!col_labels_.empty() && col_labels_.size() != cols_)
    throw ShapeMismatch("column label count mismatch");
}

BimatrixGame BimatrixGame::from_rows(const std::vector<std::vector<PayoffPair>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw ShapeMismatch("game must have at least one row and column");
  const std::size_t n = rows.front().size();
  std::vector<PayoffPair> cells;
  cells.reserve(rows.size() * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw ShapeMismatch("ragged payoff matrix");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return BimatrixGame(rows.size(), n, std::move(cells));
}

bool BimatrixGame::is_strictly_competitive(double tol) const {
  for (std::size_t u = 0; u < cells_.size(); ++u) {
    for (std::size_t v = u + 1; v < cells_.size(); ++v) {
      const double da = cells_[u].a - cells_[v].a;
      const double db = cells_[u].b - cells_[v].b;
      const bool a_tie = std::abs(da) <= tol;
      const bool b_tie = std::abs(db) <= tol;
      if (a_tie != b_tie) return false;
      if (!a_tie && da * db > 0.0) return false;
    }
  }
  return true;
}

double BimatrixGame::max_a_payoff() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& c : cells_) m = std::max(m, c.a);
  return m;
}

double BimatrixGame::min_a_payoff() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& c : cells_) m = std::min(m, c.a);
  return m;
}

BimatrixGame BimatrixGame::submatrix(const std::vector<std::size_t>& row_idx,
                                     const std::vector<std::size_t>& col_idx) const {
  if (row_idx.empty() || col_idx.empty()) throw EmptyInput("empty submatrix index set");
  std::vector<PayoffPair> cells;
  cells.reserve(row_idx.size() * col_idx.size());
  std::vector<std::string> rl, cl;
  for (std::size_t i : row_idx) {
    if (i >= rows_) throw DimensionMismatch("submatrix row index out of range");
    if (!row_labels_.empty()) rl.push_back(row_labels_[i]);
    for (std::size_t j : col_idx) {
      if (j >= cols_) throw DimensionMismatch("submatrix column index out of range");
      cells.push_back(at(i, j));
    }
  }
  if (!col_labels_.empty())
    for (std::size_t j : col_idx) cl.push_back(col_labels_[j]);
  return BimatrixGame(row_idx.size(), col_idx.size(), std::move(cells), std::move(rl),
                      std::move(cl));
}

}  // namespace oracle_games
