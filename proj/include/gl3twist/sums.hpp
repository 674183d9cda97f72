#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gl3twist/diophantine.hpp"
#include "gl3twist/forms.hpp"

namespace gl3twist {

enum class SumMode { Smooth, Sharp };

std::string to_string(SumMode mode);

struct SumExperiment {
  double N = 1.0;
  double alpha = 0.0;
  double Q = 1.0;
  RationalApproximation approx;
  SumMode mode = SumMode::Smooth;

  /// Q <= 0 picks choose_Q(N, conductor).
  static SumExperiment make(const FormSpec& spec, double N, double alpha, double Q = 0.0,
                            SumMode mode = SumMode::Smooth);
};

/// Smooth: sum_n A(1,n) e(n alpha) w(n). Sharp: sum_{n <= N} A(1,n) e(n alpha).
cplx direct_sum(const CoefficientProvider& provider, const SumExperiment& exp);

struct VoronoiReport {
  cplx direct = 0.0;
  cplx dualPlus = 0.0;
  cplx dualMinus = 0.0;
  double residual = 0.0;
  std::int64_t dualTermsUsed = 0;
  /// Largest quadrature error estimate among the transform evaluations.
  double transformError = 0.0;
  std::vector<std::string> warnings;
};

struct DualSumOptions {
  double sigma = 0.0;
  /// Multiplies the n2 cutoff N^0.2 U / N; 1 is the documented cutoff.
  double cutoff_factor = 1.0;
  unsigned workers = 0;
};

/// Both sides of the Voronoi formula
///   S = q sum_+- sum_{n1 | q} sum_{n2} A(n2,n1)/(n1 n2) S(abar, +-n2; q/n1) Psi_+-(n2 n1^2/q^3)
/// for the smooth sum with e(a n/q) and psi(y) = e^{i theta y} w(y).
VoronoiReport dual_sum(const CoefficientProvider& provider, const SumExperiment& exp,
                       double tol = 1e-8, const DualSumOptions& options = {});

/// Largest n2 kept for divisor n1 (the transform cutoff x N <= N^0.2 U).
std::int64_t dual_cutoff(double N, double theta_n, double conductor, std::int64_t q,
                         std::int64_t n1, double factor = 1.0);

struct TkReport {
  double value = 0.0;
  double envelope = 0.0;  ///< predicted_bound(...).value at the experiment's (N, Q, theta N)
  std::int64_t termsUsed = 0;
  double epsilon = 0.1;
};

/// T_k = q^{3/2 + eps} sum_n |A(n,1)|/n |Psi_k(n/q^3)| with eps = 0.1 and the
/// dual_sum cutoff (n1 = 1).
TkReport T_k(const CoefficientProvider& provider, const SumExperiment& exp, int k,
             double tol = 1e-8, const DualSumOptions& options = {});

struct BoundReport {
  /// (QN)^eps (Q^{3/2} c^{1/2} + N Q^{-1/2} + (N/Q)^{3/2})
  double value = 0.0;
  /// N^{3/4 + eps} c^{1/4}
  double ramanujan = 0.0;
  /// N^{3/4 + eps} c^{5/12}
  double unconditional = 0.0;
  /// Position of |theta N| relative to c^{1/3} and c^{1/2}.
  std::string regime;
  double epsilon = 0.05;
};

BoundReport predicted_bound(double N, double conductor, double Q, double theta_n);

struct FitRecord {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<double> N;
  std::vector<double> maxima;  ///< max over alpha of |S| per N
  std::vector<double> perAlphaSlopes;
};

/// Least-squares slope of log max_alpha |S(N, alpha)| against log N. The
/// provider must cover 2 max N.
FitRecord exponent_fit(const CoefficientProvider& provider, const std::vector<double>& N_list,
                       const std::vector<double>& alphas, SumMode mode = SumMode::Sharp,
                       unsigned workers = 0);

/// Reduced fractions a/q in [0, 1) with q <= 20, a handful of quadratic
/// irrationals, and 100 uniform points from a fixed seed.
std::vector<double> mixed_alpha_preset(std::uint64_t seed = 20240917);
std::vector<double> quadratic_irrationals();

}  // namespace gl3twist
