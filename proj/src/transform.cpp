#include "gl3twist/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gl3twist/error.hpp"
#include "gl3twist/numeric.hpp"
#include "gl3twist/phase.hpp"
#include "gl3twist/quadrature.hpp"
#include "gl3twist/special.hpp"

namespace gl3twist {
namespace {

constexpr double kPi = std::numbers::pi;
const double kPi3 = kPi * kPi * kPi;
const cplx kI(0.0, 1.0);

struct LogValue {
  cplx log;
  bool zero = false;
};

// log G(s) with an exact-zero flag.
LogValue log_gamma_quotient(cplx s, int k) {
  const cplx num = 0.5 * (s + static_cast<double>(k));
  if (num.imag() == 0.0 && num.real() <= 0.0 && num.real() == std::floor(num.real())) {
    throw GammaPole("gamma pole: (s+k)/2 is a non-positive integer");
  }
  const auto den = log_rgamma(0.5 * (1.0 - s + static_cast<double>(k)));
  if (den.zero) return {0.0, true};
  return {log_gamma(num) + den.value, false};
}

LogValue log_script_G(cplx s, int k, const LanglandsParams& params) {
  LogValue total{0.0, false};
  for (double a : params.values()) {
    const auto f = log_gamma_quotient(s + cplx(0.0, a), k);
    if (f.zero) return {0.0, true};
    total.log += f.log;
  }
  return total;
}

// |J(sigma + i tau)| with J(s) = int_0^1 w(u) e^{i theta N (1+u)} (1+u)^{-s-1} du,
// composite Gauss-Legendre in long double.
long double j_magnitude_extended(double theta_n, double sigma, double tau) {
  using Real = long double;
  static const auto rule = [] {
    std::pair<std::vector<Real>, std::vector<Real>> r;
    gauss_legendre_rule<Real>(16, r.first, r.second);
    return r;
  }();
  const double variation = std::abs(theta_n) + std::abs(tau) * std::numbers::ln2;
  const auto panels = static_cast<std::size_t>(std::ceil(variation / (2.0 * kPi))) + 8;
  Real re = 0;
  Real im = 0;
  for (std::size_t p = 0; p < panels; ++p) {
    const Real lo = Real(p) / Real(panels);
    const Real width = Real(1) / Real(panels);
    for (std::size_t i = 0; i < rule.first.size(); ++i) {
      const Real u = lo + width * (rule.first[i] + 1) / 2;
      const Real v = u * (1 - u);
      if (v <= 0) continue;
      const Real expo = 4 - 1 / v;
      if (expo < -11000) continue;
      const Real l = std::log1p(u);
      const Real amp = width / 2 * rule.second[i] * std::exp(expo - (Real(sigma) + 1) * l);
      const Real phase = Real(theta_n) * (1 + u) - Real(tau) * l;
      re += amp * std::cos(phase);
      im += amp * std::sin(phase);
    }
  }
  return std::hypot(re, im);
}

void check_k(int k) {
  if (k != 0 && k != 1) throw std::invalid_argument("k must be 0 or 1");
}

}  // namespace

cplx gamma_quotient_G(cplx s, int k) {
  check_k(k);
  const auto v = log_gamma_quotient(s, k);
  return v.zero ? cplx(0.0) : std::exp(v.log);
}

cplx script_G(cplx s, const GammaQuotientSpec& spec) {
  check_k(spec.k);
  const auto v = log_script_G(s, spec.k, spec.params);
  return v.zero ? cplx(0.0) : std::exp(v.log);
}

cplx stirling_c0(double t, int k) {
  const double sign = t >= 0.0 ? 1.0 : -1.0;
  return std::polar(1.0, -0.5 * kPi * (k - 0.5) * sign);
}

StirlingResult stirling_G_half(double t, int k) {
  check_k(k);
  if (std::abs(t) < 2.0) throw RegimeError("asymptotic regime violated: need |t| >= 2");
  const double at = std::abs(t);
  StirlingResult r;
  r.value = stirling_c0(t, k) * std::polar(1.0, -t * std::log(at / (2.0 * std::numbers::e)));
  // The next Stirling term of each gamma factor is (a^2 - a + 1/6)/(2z) with
  // z = (1/2 + k + i t)/2; the two factors contribute with opposite signs
  // in the real part, leaving about (1/12 + k^2/2)/|t| plus higher order.
  r.relativeError = (0.25 + 0.5 * k * k) / at + 1.0 / (at * at);
  return r;
}

std::string to_string(TransformRegime regime) {
  switch (regime) {
    case TransformRegime::RapidDecay:
      return "rapid-decay";
    case TransformRegime::SmallThetaN:
      return "small-theta-n";
    case TransformRegime::SaddleRegime:
      return "saddle";
  }
  return "unknown";
}

double envelope_U(double conductor, double theta_n) {
  const double t = std::abs(theta_n);
  return conductor * (t + 1.0) + t * t * t;
}

double rapid_decay_threshold(double N, double theta_n, double conductor, double epsilon) {
  return std::pow(N, epsilon) * envelope_U(conductor, theta_n);
}

TransformRegime classify_transform(double x, double N, double theta_n, double conductor,
                                   double epsilon) {
  if (x * N >= rapid_decay_threshold(N, theta_n, conductor, epsilon)) {
    return TransformRegime::RapidDecay;
  }
  if (std::abs(theta_n) <= std::max(1.0, std::pow(conductor, epsilon))) {
    return TransformRegime::SmallThetaN;
  }
  return TransformRegime::SaddleRegime;
}

MellinBarnesTransform::MellinBarnesTransform(const LanglandsParams& params,
                                             const ModulatedWindow& win, double sigma, double tol,
                                             double x_min, double x_max, unsigned workers)
    : params_(params), win_(win), sigma_(sigma), tol_(tol), x_min_(x_min), x_max_(x_max) {
  if (!(sigma > -0.5 && sigma <= 0.5)) {
    throw std::invalid_argument("contour abscissa sigma must lie in (-1/2, 1/2]");
  }
  if (!(x_min > 0.0) || !(x_max >= x_min)) throw std::invalid_argument("need 0 < x_min <= x_max");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!(win.N > 0.0)) throw std::invalid_argument("window scale N must be positive");
  if (workers == 0) workers = default_workers();

  const double theta_n = win.theta * win.N;
  const double log_x_bound = std::max(std::abs(std::log(kPi3 * x_min * win.N)),
                                      std::abs(std::log(kPi3 * x_max * win.N)));
  const double x_scale = std::max(std::pow(kPi3 * x_min * win.N, -sigma),
                                  std::pow(kPi3 * x_max * win.N, -sigma));

  // Integrand size |G_k(1+s) J(s)| at s = sigma + i tau. Far out J is below
  // double round-off, so it is measured in extended precision.
  auto magnitude = [&](double tau) {
    const double j_abs = static_cast<double>(j_magnitude_extended(theta_n, sigma, tau));
    double g_abs = 0.0;
    for (int k = 0; k < 2; ++k) {
      const auto g = log_script_G(cplx(1.0 + sigma, tau), k, params);
      if (!g.zero) g_abs = std::max(g_abs, std::exp(g.log.real()));
    }
    return g_abs * j_abs;
  };
  // psi~ decays like exp(-c sqrt|tau|) past |theta N|, so the tail beyond T
  // is about the integrand at T times a decay length of order sqrt(T).
  auto tail_at = [&](double t) {
    const double m = std::max(magnitude(t), magnitude(-t));
    return m * 4.0 * std::sqrt(t) / (2.0 * kPi);
  };
  double tau_max = std::max(1.0, std::pow(std::abs(theta_n), 1.2)) + 50.0 * std::log(1.0 / tol);
  tail_ = tail_at(tau_max);
  for (int i = 0; i < 40 && tail_ * x_scale > 0.25 * tol; ++i) {
    const double next = tail_at(1.15 * tau_max);
    // Once |J| reaches the long-double floor (~1e-19) the measured tail
    // only grows with |G|; the true tail is already below the floor.
    if (next >= 0.5 * tail_) break;
    tau_max *= 1.15;
    tail_ = next;
  }

  // Largest tau-derivative of the total phase on [-T, T]: log X from
  // (pi^3 x N)^{-i tau}, at most log 2 from J, and ~log|tau + a_j|/2 per
  // gamma quotient.
  double omega = log_x_bound + std::numbers::ln2 + 2.0;
  for (double a : params.values()) {
    omega += std::max(1.0, std::log(2.0 + 0.5 * (tau_max + std::abs(a))));
  }
  const double h = 2.0 * kPi / (10.0 * omega);
  const auto half = static_cast<std::size_t>(std::ceil(tau_max / h));
  const std::size_t count = 2 * half + 1;
  tau_max_ = h * static_cast<double>(half);
  h_ = h;
  tau_.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    tau_[j] = h * (static_cast<double>(j) - static_cast<double>(half));
  }

  // J(s) = int_0^1 w(u) e^{i theta N (1+u)} (1+u)^{-s-1} du on a fixed
  // composite Gauss-Legendre rule (16 nodes per period of the phase),
  // stepping e^{-i tau log(1+u)} along the grid.
  const double variation = std::abs(theta_n) + tau_max_ * std::numbers::ln2;
  const auto panels = static_cast<std::size_t>(std::ceil(variation / (2.0 * kPi))) + 8;
  static const GaussLegendre rule(16);
  std::vector<cplx> base;
  std::vector<double> logs;
  base.reserve(panels * rule.nodes.size());
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = static_cast<double>(p) / static_cast<double>(panels);
    const double width = 1.0 / static_cast<double>(panels);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double u = lo + 0.5 * width * (rule.nodes[i] + 1.0);
      const double w = window_eval(1.0, 1.0 + u);
      if (w < 1e-18) continue;
      const double l = std::log1p(u);
      base.push_back(0.5 * width * rule.weights[i] * w *
                     std::exp(cplx(-(sigma + 1.0) * l, theta_n * (1.0 + u))));
      logs.push_back(l);
    }
  }

  std::vector<cplx> j_values(count);
  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  parallel_for(chunks, workers, [&](std::size_t c) {
    const std::size_t j0 = c * kChunk;
    const std::size_t j1 = std::min(count, j0 + kChunk);
    std::vector<cplx> cur(base.size());
    std::vector<cplx> rot(base.size());
    for (std::size_t m = 0; m < base.size(); ++m) {
      cur[m] = base[m] * std::polar(1.0, -tau_[j0] * logs[m]);
      rot[m] = std::polar(1.0, -h * logs[m]);
    }
    for (std::size_t j = j0; j < j1; ++j) {
      cplx acc = 0.0;
      for (std::size_t m = 0; m < base.size(); ++m) {
        acc += cur[m];
        cur[m] *= rot[m];
      }
      j_values[j] = acc;
    }
  });

  for (int k = 0; k < 2; ++k) {
    auto& w = weights_[k];
    w.assign(count, 0.0);
    parallel_for(chunks, workers, [&](std::size_t c) {
      const std::size_t j0 = c * kChunk;
      const std::size_t j1 = std::min(count, j0 + kChunk);
      for (std::size_t j = j0; j < j1; ++j) {
        const auto g = log_script_G(cplx(1.0 + sigma, tau_[j]), k, params);
        if (g.zero) continue;
        w[j] = std::exp(g.log) * j_values[j] * (h / (2.0 * kPi));
      }
    });
  }
}

TransformResult MellinBarnesTransform::psi_k(double x, int k) const {
  check_k(k);
  if (!(x > 0.0)) throw std::invalid_argument("transform argument x must be positive");
  if (x < x_min_ * (1.0 - 1e-12) || x > x_max_ * (1.0 + 1e-12)) {
    throw std::invalid_argument("x outside the range this transform was tabulated for");
  }
  const double log_x = std::log(kPi3 * x * win_.N);
  const auto& w = weights_[k];
  CompensatedComplexSum fine;
  CompensatedComplexSum coarse;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == 0.0) continue;
    const cplx term = w[j] * std::polar(1.0, -tau_[j] * log_x);
    fine.add(term);
    if (j % 2 == 0) coarse.add(2.0 * term);
  }
  const double scale = std::exp(-sigma_ * log_x);
  TransformResult r;
  r.value = fine.value() * scale;
  r.quadratureError = (std::abs(fine.value() - coarse.value()) + tail_) * scale;
  r.contourSigma = sigma_;
  r.truncationTau = tau_max_;
  r.regime = classify_transform(x, win_.N, win_.theta_n(), analytic_conductor(params_));
  r.converged = r.quadratureError <= tol_;
  return r;
}

std::pair<cplx, cplx> MellinBarnesTransform::psi_pm(double x) const {
  const cplx p0 = psi_k(x, 0).value;
  const cplx p1 = psi_k(x, 1).value;
  const double norm = 1.0 / (2.0 * std::pow(kPi, 1.5));
  return {norm * (p0 - kI * p1), norm * (p0 + kI * p1)};
}

TransformResult psi_k_contour(double x, const GammaQuotientSpec& spec, const ModulatedWindow& win,
                              double sigma, double tol) {
  check_k(spec.k);
  const MellinBarnesTransform t(spec.params, win, sigma, tol, x, x);
  return t.psi_k(x, spec.k);
}

std::pair<cplx, cplx> psi_pm(double x, const GammaQuotientSpec& spec0,
                             const GammaQuotientSpec& spec1, const ModulatedWindow& win,
                             double sigma, double tol) {
  if (spec0.k != 0 || spec1.k != 1) throw std::invalid_argument("psi_pm needs k = 0 and k = 1");
  const auto a = spec0.params.values();
  const auto b = spec1.params.values();
  if (a != b) throw std::invalid_argument("psi_pm needs the same Langlands parameters");
  const MellinBarnesTransform t(spec0.params, win, sigma, tol, x, x);
  return t.psi_pm(x);
}

namespace {

bool in_asymptotic_support(const GammaQuotientSpec& spec, const ModulatedWindow& win, double t) {
  const double tn = std::abs(win.theta_n());
  const double at = std::abs(t);
  if (at < std::pow(tn, 0.8) || at > std::pow(tn, 1.2)) return false;
  const double cut = std::max(2.0, std::pow(analytic_conductor(spec.params), 0.2));
  for (double a : spec.params.values()) {
    if (std::abs(t + a) < cut) return false;
  }
  return true;
}

}  // namespace

cplx asymptotic_amplitude(double x, const GammaQuotientSpec& spec, const ModulatedWindow& win,
                          double t) {
  check_k(spec.k);
  if (win.theta == 0.0 || !in_asymptotic_support(spec, win, t)) return 0.0;
  const double y = t / win.theta;  // saddle of psi~(1/2 - i t)
  if (y <= win.N || y >= 2.0 * win.N) return 0.0;
  const double omega = window_eval(win.N, y) * std::sqrt(y);
  cplx c = 1.0;
  for (double a : spec.params.values()) c *= stirling_c0(-(t + a), spec.k);
  const double sgn = win.theta > 0.0 ? 1.0 : -1.0;
  return std::sqrt(kPi3 * x) * std::sqrt(2.0 * kPi) * omega / std::sqrt(std::abs(t)) * c *
         std::polar(1.0, 0.25 * kPi * sgn);
}

cplx asymptotic_psi(double x, const GammaQuotientSpec& spec, const ModulatedWindow& win) {
  check_k(spec.k);
  const double conductor = analytic_conductor(spec.params);
  const double tn = std::abs(win.theta_n());
  if (win.theta == 0.0 || tn < std::pow(conductor, 0.2)) {
    throw RegimeError("asymptotic_psi needs |theta N| >= conductor^0.2");
  }
  const PhaseContext ctx(x, win.N, win.theta, spec.params);
  // Saddle support: t / theta in (N, 2N).
  double lo = win.theta_n();
  double hi = 2.0 * win.theta_n();
  if (lo > hi) std::swap(lo, hi);
  std::vector<double> cuts{lo, hi};
  const double cut = std::max(2.0, std::pow(conductor, 0.2));
  for (double a : spec.params.values()) {
    for (double e : {-a - cut, -a + cut}) {
      if (e > lo && e < hi) cuts.push_back(e);
    }
  }
  for (double e : {std::pow(tn, 0.8), std::pow(tn, 1.2)}) {
    for (double s : {-1.0, 1.0}) {
      if (s * e > lo && s * e < hi) cuts.push_back(s * e);
    }
  }
  std::sort(cuts.begin(), cuts.end());

  auto integrand = [&](double t) -> cplx {
    const cplx amp = asymptotic_amplitude(x, spec, win, t);
    if (amp == 0.0) return 0.0;
    return amp * std::polar(1.0, -f_eval(ctx, t)) / (2.0 * kPi);
  };
  cplx total = 0.0;
  const double scale = std::sqrt(kPi3 * x * win.N);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    if (!in_asymptotic_support(spec, win, 0.5 * (a + b))) continue;
    const double slope = std::max(std::abs(f_prime(ctx, 0.5 * (a + b))), 1.0);
    const auto panels = static_cast<std::size_t>(std::ceil((b - a) * (slope + 2.0) / kPi)) + 4;
    const auto r = integrate_adaptive(integrand, a, b, 1e-10 * scale, panels);
    total += r.value;
  }
  return total;
}

}  // namespace gl3twist
