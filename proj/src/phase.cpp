#include "gl3twist/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gl3twist/error.hpp"

namespace gl3twist {
namespace {

constexpr double kPi3 = std::numbers::pi * std::numbers::pi * std::numbers::pi;

double e2(const LanglandsParams& p) { return p.a2 * p.a3 - p.a1 * p.a1; }

bool singular(const PhaseContext& ctx, double t) {
  if (t == 0.0) return true;
  for (double a : ctx.params.values()) {
    if (t + a == 0.0) return true;
  }
  return false;
}

void require_regular(const PhaseContext& ctx, double t) {
  if (singular(ctx, t)) throw PhaseSingularity("phase singularity at t = " + std::to_string(t));
}

double newton_cubic(double p, double q, double t) {
  for (int i = 0; i < 6; ++i) {
    const double f = (t * t + p) * t + q;
    const double d = 3.0 * t * t + p;
    if (d == 0.0) break;
    const double step = f / d;
    t -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(t))) break;
  }
  return t;
}

}  // namespace

PhaseContext::PhaseContext(double x_, double n_, double theta_, const LanglandsParams& params_)
    : x(x_), N(n_), theta(theta_), params(params_) {
  if (!(x > 0.0)) throw std::invalid_argument("phase context needs x > 0");
  if (!(N >= 1.0)) throw std::invalid_argument("phase context needs N >= 1");
  if (theta == 0.0) throw std::invalid_argument("phase context needs theta != 0");
}

double C_poly(const LanglandsParams& params, double t) {
  return (t + params.a1) * (t + params.a2) * (t + params.a3);
}

double f_eval(const PhaseContext& ctx, double t) {
  require_regular(ctx, t);
  double value = t * std::log(kPi3 * ctx.x * std::abs(t) / (std::numbers::e * std::abs(ctx.theta)));
  for (double a : ctx.params.values()) {
    value -= (t + a) * std::log(std::abs(t + a) / (2.0 * std::numbers::e));
  }
  return value;
}

double f_prime(const PhaseContext& ctx, double t) {
  require_regular(ctx, t);
  // Sum of logs rather than log of the product keeps C(t) from overflowing.
  double value = std::log(8.0 * kPi3 * ctx.x * ctx.N * std::abs(t) / std::abs(ctx.theta_n()));
  for (double a : ctx.params.values()) value -= std::log(std::abs(t + a));
  return value;
}

double f_second(const PhaseContext& ctx, double t) {
  require_regular(ctx, t);
  return (ctx.params.product() - 2.0 * t * t * t) / (t * C_poly(ctx.params, t));
}

double f_second_partial_fractions(const PhaseContext& ctx, double t) {
  require_regular(ctx, t);
  double value = 1.0 / t;
  for (double a : ctx.params.values()) value -= 1.0 / (t + a);
  return value;
}

double delta(const PhaseContext& ctx, double t) {
  if (t == 0.0) throw PhaseSingularity("phase singularity at t = 0");
  return ctx.x * ctx.N -
         std::abs(ctx.theta_n()) * std::abs(C_poly(ctx.params, t)) / (8.0 * kPi3 * std::abs(t));
}

std::vector<double> real_cubic_roots(double p, double q) {
  std::vector<double> roots;
  const double scale = std::max({1.0, std::abs(p), std::abs(q)});
  if (p == 0.0) {
    roots.push_back(std::cbrt(-q));
  } else {
    const double disc = -(4.0 * p * p * p + 27.0 * q * q);
    if (disc > 0.0) {
      // Three distinct real roots, trigonometric form.
      const double m = 2.0 * std::sqrt(-p / 3.0);
      const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
      const double phi = std::acos(arg) / 3.0;
      for (int k = 0; k < 3; ++k) {
        roots.push_back(m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0));
      }
    } else {
      // One simple real root (possibly plus a double one when disc == 0).
      const double s = std::sqrt(std::max(0.0, q * q / 4.0 + p * p * p / 27.0));
      const double u = std::cbrt(-q / 2.0 + s);
      const double v = std::cbrt(-q / 2.0 - s);
      roots.push_back(u + v);
      if (disc == 0.0 && q != 0.0) roots.push_back(-(u + v) / 2.0);
    }
  }
  for (double& r : roots) r = newton_cubic(p, q, r);
  std::sort(roots.begin(), roots.end());
  const double merge_tol = 1e-12 * std::cbrt(scale);
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [&](double a, double b) { return std::abs(a - b) <= merge_tol; }),
              roots.end());
  return roots;
}

std::vector<double> stationary_points(const PhaseContext& ctx, double t_min, double t_max) {
  if (!std::isfinite(t_min) || !std::isfinite(t_max)) {
    throw std::invalid_argument("stationary_points needs a finite range");
  }
  if (t_min > t_max) std::swap(t_min, t_max);
  // f'(t) = 0  <=>  K |t| = |C(t)|  <=>  C(t) = K t or C(t) = -K t.
  const double k = 8.0 * kPi3 * ctx.x * ctx.N / std::abs(ctx.theta_n());
  const double p = e2(ctx.params);
  const double q = ctx.params.product();
  std::vector<double> candidates;
  for (double sign : {-1.0, 1.0}) {
    for (double r : real_cubic_roots(p + sign * k, q)) candidates.push_back(r);
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<double> roots;
  for (double r : candidates) {
    if (r < t_min || r > t_max || singular(ctx, r)) continue;
    // Polish on f' itself by bisection inside a bracketing window.
    double h = 1e-7 * std::max(1.0, std::abs(r));
    double lo = r - h;
    double hi = r + h;
    if (singular(ctx, lo) || singular(ctx, hi)) continue;
    double flo = f_prime(ctx, lo);
    double fhi = f_prime(ctx, hi);
    if (flo * fhi > 0.0) continue;  // tangency, no sign change
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      const double fm = f_prime(ctx, mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    const double root = 0.5 * (lo + hi);
    if (!roots.empty() && std::abs(roots.back() - root) <= 1e-12 * std::max(1.0, std::abs(root))) {
      continue;
    }
    roots.push_back(root);
  }
  return roots;
}

DyadicCell dyadic_cells(const LanglandsParams& params, double M, double t_min, double t_max) {
  if (!(M >= 1.0)) throw std::invalid_argument("dyadic level M must be >= 1");
  if (t_min > t_max) std::swap(t_min, t_max);
  DyadicCell cell;
  cell.M = M;
  cell.flagged = M < std::pow(analytic_conductor(params), 0.2);

  const double p = e2(params);
  const double q = params.product();
  std::vector<double> cuts{t_min, t_max};
  for (double level : {M, 2.0 * M, -M, -2.0 * M}) {
    for (double r : real_cubic_roots(p, q - level)) {
      if (r > t_min && r < t_max) cuts.push_back(r);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    const double c = std::abs(C_poly(params, mid));
    if (c >= M && c < 2.0 * M) {
      if (!cell.intervals.empty() && cell.intervals.back().hi == cuts[i]) {
        cell.intervals.back().hi = cuts[i + 1];
      } else {
        cell.intervals.push_back({cuts[i], cuts[i + 1]});
      }
    }
  }
  return cell;
}

std::vector<DyadicCell> dyadic_decomposition(const LanglandsParams& params, double t_min,
                                             double t_max) {
  if (t_min > t_max) std::swap(t_min, t_max);
  // |C| is maximal at an endpoint or a critical point t = +-sqrt(-e2/3).
  double c_max = std::max(std::abs(C_poly(params, t_min)), std::abs(C_poly(params, t_max)));
  const double p = e2(params);
  if (p < 0.0) {
    for (double s : {-1.0, 1.0}) {
      const double t = s * std::sqrt(-p / 3.0);
      if (t > t_min && t < t_max) c_max = std::max(c_max, std::abs(C_poly(params, t)));
    }
  }
  std::vector<DyadicCell> cells;
  for (double m = 1.0; m <= c_max; m *= 2.0) {
    DyadicCell cell = dyadic_cells(params, m, t_min, t_max);
    if (!cell.intervals.empty()) cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace gl3twist
