#include "oracle_games/oracle_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "oracle_games/game.hpp"

namespace oracle_games {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlopeTol = 1e-9;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

OracleFunction::OracleFunction(OracleFamily family, std::vector<double> params,
                               std::vector<std::pair<double, double>> points)
    : family_(family), params_(std::move(params)), points_(std::move(points)) {}

OracleFunction OracleFunction::sqrt_k(double k) {
  if (!(k > 0.0)) throw Error("sqrt_k requires k > 0");
  return OracleFunction(OracleFamily::sqrt_k, {k}, {});
}

OracleFunction OracleFunction::sqrt_shift(double a) {
  if (!(a > 0.0)) throw Error("sqrt_shift requires a > 0");
  return OracleFunction(OracleFamily::sqrt_shift, {a}, {});
}

OracleFunction OracleFunction::linear_slope(double b) {
  if (!(b > 0.0)) throw Error("linear_slope requires b > 0");
  return OracleFunction(OracleFamily::linear_slope, {b}, {});
}

OracleFunction OracleFunction::constant_c(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw Error("constant_c requires c in [0, 1]");
  return OracleFunction(OracleFamily::constant_c, {c}, {});
}

OracleFunction OracleFunction::piecewise_linear(
    std::vector<std::pair<double, double>> points) {
  if (points.empty()) throw EmptyInput("piecewise oracle needs at least one breakpoint");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].first < 0.0) throw NegativePayment("breakpoint at negative payment");
    if (points[i].second < -1e-12 || points[i].second > 1.0 + 1e-12)
      throw Error("breakpoint value outside [0, 1]");
    points[i].second = clamp01(points[i].second);
    if (i > 0 && points[i].first <= points[i - 1].first)
      throw Error("breakpoints must be strictly increasing in x");
  }
  if (points.front().first > 0.0)
    points.insert(points.begin(), {0.0, points.front().second});
  return OracleFunction(OracleFamily::piecewise_linear, {}, std::move(points));
}

OracleFunction OracleFunction::with_x_cap(double cap) const {
  if (!(cap > 0.0)) throw Error("x_cap must be positive");
  OracleFunction f = *this;
  f.x_cap_ = cap;
  return f;
}

OracleFunction OracleFunction::with_shift(double c) const {
  if (!(c >= 0.0 && c < 1.0)) throw DegenerateOracle("shift must lie in [0, 1)");
  OracleFunction f = *this;
  // Composition of (I - c0)/(1 - c0) then (J - c)/(1 - c).
  f.shift_ = shift_ + c * (1.0 - shift_);
  return f;
}

double OracleFunction::base_eval(double x) const {
  if (x < 0.0) throw NegativePayment("oracle payment must be nonnegative");
  if (x_cap_) x = std::min(x, *x_cap_);
  switch (family_) {
    case OracleFamily::sqrt_k:
      return clamp01(std::sqrt(params_[0] * x));
    case OracleFamily::sqrt_shift:
      return clamp01(std::sqrt(x + params_[0]) - std::sqrt(params_[0]));
    case OracleFamily::linear_slope:
      return clamp01(params_[0] * x);
    case OracleFamily::constant_c:
      return params_[0];
    case OracleFamily::piecewise_linear: {
      if (x <= points_.front().first) return points_.front().second;
      if (x >= points_.back().first) return points_.back().second;
      auto it = std::upper_bound(points_.begin(), points_.end(), x,
                                 [](double v, const auto& p) { return v < p.first; });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double t = (x - lo.first) / (hi.first - lo.first);
      return lo.second + t * (hi.second - lo.second);
    }
  }
  throw InternalError("unreachable oracle family");
}

double OracleFunction::eval(double x) const {
  const double v = base_eval(x);
  if (shift_ == 0.0) return v;
  return clamp01((v - shift_) / (1.0 - shift_));
}

double OracleFunction::base_sup() const {
  switch (family_) {
    case OracleFamily::constant_c:
      return params_[0];
    case OracleFamily::piecewise_linear: {
      double s = 0.0;
      for (const auto& p : points_)
        if (!x_cap_ || p.first <= *x_cap_) s = std::max(s, p.second);
      if (x_cap_) s = std::max(s, base_eval(*x_cap_));
      return s;
    }
    default:
      return x_cap_ ? base_eval(*x_cap_) : 1.0;
  }
}

double OracleFunction::base_saturation_x() const {
  const double sup = base_sup();
  double x1 = 0.0;
  switch (family_) {
    case OracleFamily::sqrt_k:
      x1 = (sup * sup) / params_[0];
      break;
    case OracleFamily::sqrt_shift: {
      const double t = sup + std::sqrt(params_[0]);
      x1 = t * t - params_[0];
      break;
    }
    case OracleFamily::linear_slope:
      x1 = sup / params_[0];
      break;
    case OracleFamily::constant_c:
      return 0.0;
    case OracleFamily::piecewise_linear: {
      // Smallest x attaining the supremum.
      double prev_x = points_.front().first, prev_y = points_.front().second;
      if (prev_y >= sup - 1e-15) return prev_x;
      for (std::size_t i = 1; i < points_.size(); ++i) {
        double x = points_[i].first, y = points_[i].second;
        if (x_cap_ && x > *x_cap_) {
          y = base_eval(*x_cap_);
          x = *x_cap_;
        }
        if (y >= sup - 1e-15) {
          const double t = (sup - prev_y) / (y - prev_y);
          return prev_x + t * (x - prev_x);
        }
        prev_x = x;
        prev_y = y;
      }
      return points_.back().first;
    }
  }
  if (x_cap_) x1 = std::min(x1, *x_cap_);
  return x1;
}

double OracleFunction::sup_value() const {
  if (shift_ == 0.0) return base_sup();
  return clamp01((base_sup() - shift_) / (1.0 - shift_));
}

double OracleFunction::saturation_x() const { return base_saturation_x(); }

double OracleFunction::base_derivative(double x, DerivSide side) const {
  if (x < 0.0) throw OutsideDomain("derivative requested at negative payment");
  if (x == 0.0 && side == DerivSide::left)
    throw OutsideDomain("no left derivative at x = 0");
  if (x_cap_ && x > *x_cap_ + 1e-15)
    throw OutsideDomain("derivative requested beyond x_cap");
  const double sat = base_saturation_x();
  const bool at_sat = std::abs(x - sat) <= 1e-15 * std::max(1.0, sat);
  if (x > sat && !at_sat) return 0.0;
  if (at_sat && side == DerivSide::right) return 0.0;
  switch (family_) {
    case OracleFamily::sqrt_k:
      if (x == 0.0) return kInf;
      return 0.5 * std::sqrt(params_[0] / x);
    case OracleFamily::sqrt_shift:
      return 0.5 / std::sqrt(x + params_[0]);
    case OracleFamily::linear_slope:
      return params_[0];
    case OracleFamily::constant_c:
      return 0.0;
    case OracleFamily::piecewise_linear: {
      auto slope = [&](std::size_t i) {
        return (points_[i + 1].second - points_[i].second) /
               (points_[i + 1].first - points_[i].first);
      };
      if (points_.size() == 1) return 0.0;
      if (x >= points_.back().first)
        return side == DerivSide::left && x == points_.back().first
                   ? slope(points_.size() - 2)
                   : 0.0;
      // Locate the segment; at an interior breakpoint the side picks it.
      for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        const double lo = points_[i].first, hi = points_[i + 1].first;
        if (x < lo) break;
        if (x < hi) {
          if (x == lo && side == DerivSide::left)
            return i == 0 ? slope(0) : slope(i - 1);
          return slope(i);
        }
      }
      return 0.0;
    }
  }
  throw InternalError("unreachable oracle family");
}

double OracleFunction::derivative(double x, DerivSide side) const {
  const double d = base_derivative(x, side);
  if (shift_ == 0.0) return d;
  return d / (1.0 - shift_);
}

double OracleFunction::level_x(double a) const {
  const double sup = sup_value();
  if (a < -1e-12 || a > sup + 1e-12)
    throw LevelUnreachable("response level " + std::to_string(a) +
                           " outside [0, " + std::to_string(sup) + "]");
  a = std::clamp(a, 0.0, sup);
  const double target = shift_ + a * (1.0 - shift_);  // pre-shift level
  switch (family_) {
    case OracleFamily::sqrt_k:
      return (target * target) / params_[0];
    case OracleFamily::sqrt_shift: {
      const double t = target + std::sqrt(params_[0]);
      return t * t - params_[0];
    }
    case OracleFamily::linear_slope:
      return target / params_[0];
    case OracleFamily::constant_c:
      if (std::abs(target - params_[0]) <= 1e-12) return 0.0;
      throw LevelUnreachable("constant oracle never attains requested level");
    case OracleFamily::piecewise_linear: {
      if (target <= points_.front().second + 1e-15 &&
          target >= points_.front().second - 1e-15)
        return points_.front().first;
      if (target < points_.front().second)
        throw LevelUnreachable("level below the curve's starting value");
      for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        const double y0 = points_[i].second, y1 = points_[i + 1].second;
        const double lo = std::min(y0, y1), hi = std::max(y0, y1);
        if (target >= lo - 1e-15 && target <= hi + 1e-15 && y1 != y0) {
          const double t = (target - y0) / (y1 - y0);
          if (t >= -1e-12 && t <= 1.0 + 1e-12)
            return points_[i].first +
                   std::clamp(t, 0.0, 1.0) * (points_[i + 1].first - points_[i].first);
        }
        if (std::abs(target - y0) <= 1e-15) return points_[i].first;
      }
      if (std::abs(target - points_.back().second) <= 1e-12)
        return points_.back().first;
      throw LevelUnreachable("piecewise oracle never attains requested level");
    }
  }
  throw InternalError("unreachable oracle family");
}

SlopeInterval OracleFunction::slope_x(double b) const {
  if (!(b > 0.0)) throw Error("slope query requires b > 0");
  const double target = b * (1.0 - shift_);  // pre-shift slope
  const double sat = base_saturation_x();
  switch (family_) {
    case OracleFamily::sqrt_k: {
      // I' = 0.5*sqrt(k/x), decreasing from +inf to its value at saturation.
      const double k = params_[0];
      const double b_min = sat > 0.0 ? 0.5 * std::sqrt(k / sat) : kInf;
      if (target < b_min - 1e-15)
        throw SlopeOutOfRange("slope below the minimum attained before saturation", sat);
      const double x = k / (4.0 * target * target);
      return {x, x};
    }
    case OracleFamily::sqrt_shift: {
      const double p = params_[0];
      const double b_max = 0.5 / std::sqrt(p);
      const double b_min = 0.5 / std::sqrt(sat + p);
      if (target > b_max + 1e-15)
        throw SlopeOutOfRange("slope above the initial derivative", 0.0);
      if (target < b_min - 1e-15)
        throw SlopeOutOfRange("slope below the minimum attained before saturation", sat);
      const double x = std::clamp(1.0 / (4.0 * target * target) - p, 0.0, sat);
      return {x, x};
    }
    case OracleFamily::linear_slope: {
      const double m = params_[0];
      if (std::abs(target - m) <= kSlopeTol * std::max(1.0, m)) return {0.0, sat};
      if (target > m) throw SlopeOutOfRange("slope above the constant slope", 0.0);
      throw SlopeOutOfRange("slope below the constant slope", sat);
    }
    case OracleFamily::constant_c:
      throw SlopeOutOfRange("constant oracle has zero derivative everywhere", 0.0);
    case OracleFamily::piecewise_linear: {
      double lo = kInf, hi = -kInf;
      double fallback = 0.0;
      for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        double x0 = points_[i].first, x1 = points_[i + 1].first;
        if (x_cap_ && x0 >= *x_cap_) break;
        if (x_cap_) x1 = std::min(x1, *x_cap_);
        const double s = (points_[i + 1].second - points_[i].second) / (x1 - x0);
        if (std::abs(s - target) <= kSlopeTol * std::max(1.0, target)) {
          lo = std::min(lo, x0);
          hi = std::max(hi, x1);
        } else if (s > target) {
          fallback = x1;  // slope still above b at the end of this segment
        }
      }
      if (hi >= lo) return {lo, hi};
      throw SlopeOutOfRange("slope never attained by piecewise oracle", fallback);
    }
  }
  throw InternalError("unreachable oracle family");
}

bool OracleFunction::is_normalized(double tol) const {
  if (eval(0.0) > tol) return false;
  switch (family_) {
    case OracleFamily::sqrt_k:
    case OracleFamily::sqrt_shift:
    case OracleFamily::linear_slope:
    case OracleFamily::constant_c:
      return true;  // all monotone and weakly concave by construction
    case OracleFamily::piecewise_linear: {
      double prev_slope = kInf;
      for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        const double s = (points_[i + 1].second - points_[i].second) /
                         (points_[i + 1].first - points_[i].first);
        if (s < -tol) return false;
        if (s > prev_slope + 1e-12) return false;
        prev_slope = s;
      }
      return true;
    }
  }
  return false;
}

std::string OracleFunction::describe() const {
  std::ostringstream os;
  switch (family_) {
    case OracleFamily::sqrt_k:
      os << "sqrt_k(k=" << params_[0] << ")";
      break;
    case OracleFamily::sqrt_shift:
      os << "sqrt_shift(a=" << params_[0] << ")";
      break;
    case OracleFamily::linear_slope:
      os << "linear_slope(b=" << params_[0] << ")";
      break;
    case OracleFamily::constant_c:
      os << "constant_c(c=" << params_[0] << ")";
      break;
    case OracleFamily::piecewise_linear:
      os << "piecewise_linear(" << points_.size() << " breakpoints)";
      break;
  }
  if (x_cap_) os << " capped at x=" << *x_cap_;
  if (shift_ != 0.0) os << " shifted by c=" << shift_;
  return os.str();
}

OracleFunction monotone_envelope(const std::vector<std::pair<double, double>>& samples) {
  if (samples.empty()) throw EmptyInput("monotone envelope of empty sample set");
  std::vector<std::pair<double, double>> pts = samples;
  double running = 0.0;
  for (auto& p : pts) {
    running = std::max(running, p.second);
    p.second = running;
  }
  return OracleFunction::piecewise_linear(std::move(pts));
}

OracleFunction concavify(const OracleFunction& f, std::size_t grid) {
  std::vector<std::pair<double, double>> pts;
  if (f.family() == OracleFamily::piecewise_linear && f.shift() == 0.0 && !f.x_cap()) {
    pts = f.points();
  } else {
    const double hi = std::max(f.saturation_x(), 1.0);
    pts.reserve(grid + 1);
    for (std::size_t i = 0; i <= grid; ++i) {
      const double x = hi * static_cast<double>(i) / static_cast<double>(grid);
      pts.emplace_back(x, f.eval(x));
    }
  }
  // Upper hull, left to right; keeps the chain weakly concave.
  std::vector<std::pair<double, double>> hull;
  auto keeps_concave = [&](const std::pair<double, double>& p) {
    const auto& a = hull[hull.size() - 2];
    const auto& b = hull[hull.size() - 1];
    // b must lie on or above chord a-p.
    return (b.second - a.second) * (p.first - a.first) >=
           (p.second - a.second) * (b.first - a.first) - 1e-15;
  };
  for (const auto& p : pts) {
    while (hull.size() >= 2 && !keeps_concave(p)) hull.pop_back();
    hull.push_back(p);
  }
  return OracleFunction::piecewise_linear(std::move(hull));
}

namespace {

bool already_monotone_concave(const OracleFunction& f) {
  if (f.family() != OracleFamily::piecewise_linear)
    return true;  // every analytic family is monotone and weakly concave
  if (f.x_cap() || f.shift() != 0.0) return false;
  double prev_slope = kInf;
  const auto& pts = f.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double s =
        (pts[i + 1].second - pts[i].second) / (pts[i + 1].first - pts[i].first);
    if (s < -1e-12 || s > prev_slope + 1e-12) return false;
    prev_slope = s;
  }
  return true;
}

}  // namespace

NormalizationReport normalize(const OracleFunction& f, std::optional<double> x_hi,
                              std::size_t grid) {
  if (already_monotone_concave(f)) {
    NormalizationReport report{f, f, f, false, 0.0};
    report.shift_c = f.eval(0.0);
    report.shifted_game_required = report.shift_c > 1e-12;
    return report;
  }
  std::vector<std::pair<double, double>> samples;
  if (f.family() == OracleFamily::piecewise_linear) {
    samples = f.points();
  } else {
    const double hi = x_hi.value_or(std::max(f.saturation_x(), 1e-12));
    samples.reserve(grid + 1);
    for (std::size_t i = 0; i <= grid; ++i) {
      const double x = hi * static_cast<double>(i) / static_cast<double>(grid);
      samples.emplace_back(x, f.eval(x));
    }
  }
  NormalizationReport report{f, monotone_envelope(samples), f, false, 0.0};
  report.concave = concavify(report.envelope, grid);
  report.shift_c = report.concave.eval(0.0);
  report.shifted_game_required = report.shift_c > 1e-12;
  return report;
}

std::pair<BimatrixGame, OracleFunction> shift_to_zero(const BimatrixGame& m,
                                                      const OracleFunction& f) {
  const double c = f.eval(0.0);
  if (c <= 0.0) return {m, f};
  if (c >= 1.0)
    throw DegenerateOracle("oracle responds surely at zero cost; nothing to shift");
  BimatrixGame n = cross_section(m, maximal_matrix(m), c);
  return {std::move(n), f.with_shift(c)};
}

}  // namespace oracle_games
