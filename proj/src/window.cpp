#include "gl3twist/window.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gl3twist/error.hpp"
#include "gl3twist/quadrature.hpp"

namespace gl3twist {
namespace {

constexpr double kPi = std::numbers::pi;

double bump(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  return std::exp(4.0 - 1.0 / (u * (1.0 - u)));
}

// d/du of the bump
double bump_derivative(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  const double v = u * (1.0 - u);
  return bump(u) * (1.0 - 2.0 * u) / (v * v);
}

}  // namespace

double window_eval(double N, double y) { return bump((y - N) / N); }

double window_derivative(double N, double y) { return bump_derivative((y - N) / N) / N; }

double window_mass() {
  static const double mass = [] {
    const auto r = integrate_adaptive([](double u) { return std::complex<double>(bump(u)); }, 0.0,
                                      1.0, 1e-15, 8);
    return r.value.real();
  }();
  return mass;
}

cplx mellin_psi(const ModulatedWindow& win, cplx s, double tol, std::size_t max_evaluations) {
  if (!(win.N > 0.0)) throw std::invalid_argument("window scale N must be positive");
  const double theta_n = win.theta * win.N;
  const cplx sm1 = s - 1.0;
  auto integrand = [&](double u) -> cplx {
    const double w = bump(u);
    if (w == 0.0) return 0.0;
    return w * std::exp(cplx(0.0, theta_n * (1.0 + u)) + sm1 * std::log1p(u));
  };
  const double phase_variation = std::abs(theta_n) + std::abs(s.imag()) * std::numbers::ln2;
  const auto panels = static_cast<std::size_t>(std::ceil(phase_variation / (2.0 * kPi))) + 4;
  const auto r = integrate_adaptive(integrand, 0.0, 1.0, tol, panels, max_evaluations);
  const cplx scale = std::exp(s * std::log(win.N));
  if (!r.converged) {
    throw ToleranceError("mellin_psi: tolerance not reached within node budget", r.value * scale,
                         r.error * std::abs(scale));
  }
  return r.value * scale;
}

cplx direct_I(const ModulatedWindow& win, double tau) {
  const double n_sigma = std::pow(win.N, win.sigma);
  const double tol = 1e-10 * std::max(1.0, n_sigma) / n_sigma;
  return mellin_psi(win, cplx(win.sigma, tau), tol);
}

std::string to_string(SaddleRegime regime) {
  switch (regime) {
    case SaddleRegime::Saddle:
      return "saddle";
    case SaddleRegime::TauDominated:
      return "tau-dominated";
    case SaddleRegime::ThetaDominated:
      return "theta-dominated";
    case SaddleRegime::SmallTau:
      return "small-tau";
    case SaddleRegime::SmallThetaN:
      return "small-theta-n";
  }
  return "unknown";
}

SaddleRegime classify_saddle(double theta_n, double tau, double epsilon) {
  const double tn = std::abs(theta_n);
  const double t = std::abs(tau);
  if (tn <= 1.0) return SaddleRegime::SmallThetaN;
  if (t <= 1.0) return SaddleRegime::SmallTau;
  if (t >= std::pow(tn, 1.0 + epsilon)) return SaddleRegime::TauDominated;
  if (t <= std::pow(tn, 1.0 - epsilon)) return SaddleRegime::ThetaDominated;
  return SaddleRegime::Saddle;
}

cplx saddle_main_term(const ModulatedWindow& win, double tau) {
  if (win.theta == 0.0 || tau == 0.0) return 0.0;
  const double x0 = -tau / win.theta;
  if (x0 <= win.N || x0 >= 2.0 * win.N) return 0.0;
  const double omega = window_eval(win.N, x0) * std::pow(x0, win.sigma);
  const double at = std::abs(tau);
  const double phase = tau * std::log(at / (std::numbers::e * std::abs(win.theta))) +
                       0.25 * kPi * (win.theta > 0.0 ? 1.0 : -1.0);
  return std::sqrt(2.0 * kPi) * omega / std::sqrt(at) * std::polar(1.0, phase);
}

SaddleResult saddle_I(const ModulatedWindow& win, double tau, double epsilon) {
  SaddleResult result;
  result.regime = classify_saddle(win.theta_n(), tau, epsilon);
  if (result.regime == SaddleRegime::Saddle) {
    result.main = saddle_main_term(win, tau);
    result.errorEstimate =
        kSaddleErrorConstant * std::pow(win.N, win.sigma) * std::pow(std::abs(tau), -1.5);
    return result;
  }

  const double n = win.N;
  const double sigma = win.sigma;
  auto g = [&](double x) { return window_eval(n, x) * std::pow(x, sigma - 1.0); };
  const bool stationary_inside =
      win.theta != 0.0 && -tau / win.theta > n && -tau / win.theta < 2.0 * n;
  if (stationary_inside || (win.theta == 0.0 && tau == 0.0)) {
    const auto r = integrate_adaptive([&](double x) { return cplx(g(x)); }, n, 2.0 * n, 1e-14);
    result.errorEstimate = r.value.real();
    return result;
  }
  // |int g e^{i phi}| <= int |(g/phi')'| after one integration by parts.
  auto derivative_term = [&](double x) -> cplx {
    const double w = window_eval(n, x);
    if (w == 0.0) return 0.0;
    const double dg = window_derivative(n, x) * std::pow(x, sigma - 1.0) +
                      (sigma - 1.0) * w * std::pow(x, sigma - 2.0);
    const double dphi = win.theta + tau / x;
    const double ddphi = -tau / (x * x);
    return std::abs(dg / dphi - g(x) * ddphi / (dphi * dphi));
  };
  const auto r = integrate_adaptive(derivative_term, n, 2.0 * n, 1e-16, 16);
  result.errorEstimate = r.value.real();
  return result;
}

}  // namespace gl3twist
