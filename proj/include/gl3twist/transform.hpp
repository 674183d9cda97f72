#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "gl3twist/forms.hpp"
#include "gl3twist/window.hpp"

namespace gl3twist {

struct GammaQuotientSpec {
  int k = 0;  // 0 or 1
  LanglandsParams params;
};

/// G(s) = Gamma((s+k)/2) / Gamma((1-s+k)/2), evaluated as
/// exp(log Gamma((s+k)/2)) * (1/Gamma)((1-s+k)/2) so that zeros of the
/// denominator come out exactly. Throws GammaPole at numerator poles.
cplx gamma_quotient_G(cplx s, int k);

/// G(s + i a1) G(s + i a2) G(s + i a3), accumulated in log space.
cplx script_G(cplx s, const GammaQuotientSpec& spec);

/// exp(-i pi (k - 1/2) sgn(t) / 2): the constant in
/// G(1/2 - i t) ~ c0 e^{-i t log|t/2e|} as |t| -> infinity.
cplx stirling_c0(double t, int k);

struct StirlingResult {
  cplx value;
  /// Bound on |value - G(1/2 - i t)| / |G(1/2 - i t)|.
  double relativeError = 0.0;
};

/// Leading Stirling term of G(1/2 - i t). Throws RegimeError for |t| < 2.
StirlingResult stirling_G_half(double t, int k);

enum class TransformRegime { RapidDecay, SmallThetaN, SaddleRegime };

std::string to_string(TransformRegime regime);

/// U = c (|theta N| + 1) + |theta N|^3.
double envelope_U(double conductor, double theta_n);

/// RapidDecay when x N >= N^eps U; otherwise SmallThetaN when
/// |theta N| <= max(1, c^eps); otherwise SaddleRegime.
TransformRegime classify_transform(double x, double N, double theta_n, double conductor,
                                   double epsilon = 0.2);

/// The x N threshold N^eps U past which Psi_k is negligible.
double rapid_decay_threshold(double N, double theta_n, double conductor, double epsilon = 0.2);

struct TransformResult {
  cplx value = 0.0;
  double quadratureError = 0.0;
  double contourSigma = 0.0;
  double truncationTau = 0.0;
  TransformRegime regime = TransformRegime::SaddleRegime;
  /// False when quadratureError exceeds the requested tolerance.
  bool converged = true;
};

/// Psi_k(x) = (1/2 pi) int (pi^3 x)^{-s} G_k(1+s) psi~(-s) dtau on s = sigma + i tau.
///
/// The tau-integral is a trapezoid sum on a uniform grid, which converges
/// geometrically for this analytic integrand once the step resolves the
/// total phase. Everything that does not depend on x (the gamma factors and
/// psi~(-s) at the nodes) is tabulated once in the constructor, so one
/// object serves any number of x in [x_min, x_max] for both k = 0 and 1.
/// Immutable after construction and safe to share between threads.
class MellinBarnesTransform {
 public:
  MellinBarnesTransform(const LanglandsParams& params, const ModulatedWindow& win, double sigma,
                        double tol, double x_min, double x_max, unsigned workers = 0);

  TransformResult psi_k(double x, int k) const;
  /// (Psi_+, Psi_-) = (Psi_0 +- (1/i) Psi_1) / (2 pi^{3/2}).
  std::pair<cplx, cplx> psi_pm(double x) const;

  double truncation_tau() const { return tau_max_; }
  double step() const { return h_; }
  std::size_t nodes() const { return tau_.size(); }
  double sigma() const { return sigma_; }

 private:
  LanglandsParams params_;
  ModulatedWindow win_;
  double sigma_;
  double tol_;
  double x_min_;
  double x_max_;
  double tau_max_ = 0.0;
  double h_ = 0.0;
  double tail_ = 0.0;  // tail estimate beyond the cut, before the x-dependent scale
  std::vector<double> tau_;
  // h/(2 pi) * G_k(1 + s_j) * J(s_j), where psi~(-s) = N^{-s} J(s).
  std::array<std::vector<cplx>, 2> weights_;
};

TransformResult psi_k_contour(double x, const GammaQuotientSpec& spec, const ModulatedWindow& win,
                              double sigma = 0.0, double tol = 1e-8);

std::pair<cplx, cplx> psi_pm(double x, const GammaQuotientSpec& spec0,
                             const GammaQuotientSpec& spec1, const ModulatedWindow& win,
                             double sigma = 0.0, double tol = 1e-8);

/// Stationary-phase model of Psi_k on the line sigma = -1/2:
///   (1/2 pi) int_{R2} A(t) e^{-i f(t)} dt
/// where f is the phase function, A combines the saddle main term of
/// psi~(1/2 - i t) with omega = w x^{1/2} and the leading Stirling terms of
/// the three gamma quotients, and R2 = {|t + a_i| >= max(2, c^0.2)}
/// intersected with |t| in [|theta N|^0.8, |theta N|^1.2]. Requires
/// |theta N| >= c^0.2; throws RegimeError otherwise.
cplx asymptotic_psi(double x, const GammaQuotientSpec& spec, const ModulatedWindow& win);

/// The amplitude A(t) above (zero off the support); exposed for checks on
/// its derivatives.
cplx asymptotic_amplitude(double x, const GammaQuotientSpec& spec, const ModulatedWindow& win,
                          double t);

}  // namespace gl3twist
