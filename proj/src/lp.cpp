#include "oracle_games/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "oracle_games/errors.hpp"

namespace oracle_games::lp {

namespace {

constexpr double kTol = 1e-9;
constexpr int kMaxPivots = 20000;

struct Tableau {
  std::size_t m = 0;                     // constraint rows
  std::size_t n = 0;                     // columns excluding rhs
  std::vector<std::vector<double>> row;  // m rows of n+1 (rhs last)
  std::vector<double> obj;               // n+1 reduced-cost row
  std::vector<std::size_t> basis;        // basic column per row
  std::vector<bool> allowed;             // columns permitted to enter

  void pivot(std::size_t pr, std::size_t pc) {
    const double pv = row[pr][pc];
    for (double& v : row[pr]) v /= pv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pr) continue;
      const double f = row[i][pc];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= n; ++j) row[i][j] -= f * row[pr][j];
    }
    const double f = obj[pc];
    if (f != 0.0)
      for (std::size_t j = 0; j <= n; ++j) obj[j] -= f * row[pr][j];
    basis[pr] = pc;
  }

  // Returns true on optimality, false on unboundedness.
  bool solve_to_optimum() {
    for (int iter = 0; iter < kMaxPivots; ++iter) {
      // Bland's rule: first allowed column with positive reduced cost.
      std::size_t pc = n;
      for (std::size_t j = 0; j < n; ++j)
        if (allowed[j] && obj[j] > kTol) {
          pc = j;
          break;
        }
      if (pc == n) return true;
      std::size_t pr = m;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) {
        if (row[i][pc] > kTol) {
          const double ratio = row[i][n] / row[i][pc];
          if (ratio < best - kTol ||
              (ratio < best + kTol && (pr == m || basis[i] < basis[pr]))) {
            best = ratio;
            pr = i;
          }
        }
      }
      if (pr == m) return false;
      pivot(pr, pc);
    }
    throw InternalError("simplex failed to converge");
  }
};

}  // namespace

Result maximize(const std::vector<double>& objective,
                const std::vector<Constraint>& constraints) {
  const std::size_t nv = objective.size();
  const std::size_t m = constraints.size();

  // Normalize rows to nonnegative rhs; ge rows get surplus + artificial.
  enum class Kind { le, ge, eq };
  std::vector<Kind> kind(m);
  std::vector<std::vector<double>> a(m, std::vector<double>(nv));
  std::vector<double> b(m);
  std::size_t n_slack = 0, n_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (constraints[i].coeffs.size() != nv)
      throw DimensionMismatch("constraint width does not match objective");
    double sign = constraints[i].rhs < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < nv; ++j) a[i][j] = sign * constraints[i].coeffs[j];
    b[i] = sign * constraints[i].rhs;
    if (constraints[i].rel == Relation::eq) {
      kind[i] = Kind::eq;
      ++n_art;
    } else if (sign > 0.0) {
      kind[i] = Kind::le;
      ++n_slack;
    } else {
      kind[i] = Kind::ge;
      ++n_slack;
      ++n_art;
    }
  }

  Tableau t;
  t.m = m;
  t.n = nv + n_slack + n_art;
  t.row.assign(m, std::vector<double>(t.n + 1, 0.0));
  t.obj.assign(t.n + 1, 0.0);
  t.basis.assign(m, 0);
  t.allowed.assign(t.n, true);

  std::size_t slack_at = nv, art_at = nv + n_slack;
  std::vector<std::size_t> art_cols;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) t.row[i][j] = a[i][j];
    t.row[i][t.n] = b[i];
    if (kind[i] == Kind::le) {
      t.row[i][slack_at] = 1.0;
      t.basis[i] = slack_at++;
    } else {
      if (kind[i] == Kind::ge) t.row[i][slack_at++] = -1.0;
      t.row[i][art_at] = 1.0;
      t.basis[i] = art_at;
      art_cols.push_back(art_at++);
    }
  }

  Result res;
  if (!art_cols.empty()) {
    // Phase 1: maximize -sum(artificials).
    for (std::size_t c : art_cols) t.obj[c] = -1.0;
    for (std::size_t i = 0; i < m; ++i)
      if (t.row[i][t.basis[i]] != 0.0 && t.obj[t.basis[i]] != 0.0)
        for (std::size_t j = 0; j <= t.n; ++j) t.obj[j] += t.row[i][j];
    if (!t.solve_to_optimum()) throw InternalError("phase-1 simplex unbounded");
    double infeas = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t c : art_cols)
        if (t.basis[i] == c) infeas += t.row[i][t.n];
    if (infeas > 1e-7) {
      res.status = Result::Status::infeasible;
      return res;
    }
    for (std::size_t c : art_cols) t.allowed[c] = false;
  }

  // Phase 2.
  t.obj.assign(t.n + 1, 0.0);
  for (std::size_t j = 0; j < nv; ++j) t.obj[j] = objective[j];
  for (std::size_t i = 0; i < m; ++i) {
    const double c = t.basis[i] < nv ? objective[t.basis[i]] : 0.0;
    if (c != 0.0)
      for (std::size_t j = 0; j <= t.n; ++j) t.obj[j] -= c * t.row[i][j];
  }
  if (!t.solve_to_optimum()) {
    res.status = Result::Status::unbounded;
    return res;
  }

  res.status = Result::Status::optimal;
  res.x.assign(nv, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] < nv) res.x[t.basis[i]] = t.row[i][t.n];
  res.objective = 0.0;
  for (std::size_t j = 0; j < nv; ++j) res.objective += objective[j] * res.x[j];
  return res;
}

}  // namespace oracle_games::lp
