#pragma once

#include <array>
#include <vector>

#include "gl3twist/forms.hpp"

namespace gl3twist {

/// Everything the phase function
///   f(t) = t log(pi^3 x |t| / (e |theta|)) - sum_i (t + a_i) log(|t + a_i| / 2e)
/// depends on. theta must be nonzero.
struct PhaseContext {
  double x = 1.0;
  double N = 1.0;
  double theta = 1.0;
  LanglandsParams params;

  PhaseContext() = default;
  PhaseContext(double x, double N, double theta, const LanglandsParams& params);

  double theta_n() const { return theta * N; }
};

/// C(t) = prod (t + a_i) = t^3 + e2 t + e3 with e2 = a2 a3 - a1^2, e3 = a1 a2 a3.
double C_poly(const LanglandsParams& params, double t);

double f_eval(const PhaseContext& ctx, double t);
/// log(8 pi^3 x N |t| / |theta N C(t)|)
double f_prime(const PhaseContext& ctx, double t);
/// (a1 a2 a3 - 2 t^3) / (t C(t))
double f_second(const PhaseContext& ctx, double t);
/// 1/t - sum 1/(t + a_i); the same quantity as f_second, kept as a check.
double f_second_partial_fractions(const PhaseContext& ctx, double t);
/// x N - |theta N| prod |t + a_i| / (8 pi^3 |t|)
double delta(const PhaseContext& ctx, double t);

/// Real roots of t^3 + p t + q, ascending, Newton-polished. A double root is
/// reported once.
std::vector<double> real_cubic_roots(double p, double q);

/// Roots of f' in [t_min, t_max] at which f' changes sign, polished so that
/// |f'(r)| <= 1e-9.
std::vector<double> stationary_points(const PhaseContext& ctx, double t_min, double t_max);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
};

/// I_M = C^{-1}([M, 2M) u (-2M, -M]) within a working t-range.
struct DyadicCell {
  double M = 1.0;
  std::vector<Interval> intervals;
  /// M below conductor^0.2: such cells lie outside the region where every
  /// |t + a_i| is large, and are kept only for completeness.
  bool flagged = false;
};

DyadicCell dyadic_cells(const LanglandsParams& params, double M, double t_min, double t_max);

/// Cells for M = 1, 2, 4, ... until 2M exceeds max |C| on the range.
std::vector<DyadicCell> dyadic_decomposition(const LanglandsParams& params, double t_min,
                                             double t_max);

}  // namespace gl3twist
