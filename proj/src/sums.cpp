#include "gl3twist/sums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gl3twist/arith.hpp"
#include "gl3twist/error.hpp"
#include "gl3twist/numeric.hpp"
#include "gl3twist/transform.hpp"
#include "gl3twist/window.hpp"

namespace gl3twist {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e(n alpha) with the integer part of n alpha removed in extended precision.
cplx additive_character(std::int64_t n, double alpha) {
  const long double t = static_cast<long double>(n) * static_cast<long double>(alpha);
  const long double frac = t - std::floor(t);
  return std::polar(1.0, kTwoPi * static_cast<double>(frac));
}

std::int64_t positive_mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string to_string(SumMode mode) { return mode == SumMode::Smooth ? "smooth" : "sharp"; }

SumExperiment SumExperiment::make(const FormSpec& spec, double N, double alpha, double Q,
                                  SumMode mode) {
  SumExperiment e;
  e.N = N;
  e.alpha = alpha;
  e.Q = Q > 0.0 ? Q : choose_Q(N, spec.conductor());
  e.approx = dirichlet_approx(alpha, e.Q);
  e.mode = mode;
  return e;
}

cplx direct_sum(const CoefficientProvider& provider, const SumExperiment& exp) {
  std::int64_t lo = 1;
  std::int64_t hi = 0;
  if (exp.mode == SumMode::Sharp) {
    hi = exp.N < 1.0 ? 0 : static_cast<std::int64_t>(std::floor(exp.N));
  } else {
    lo = static_cast<std::int64_t>(std::floor(exp.N)) + 1;
    hi = static_cast<std::int64_t>(std::ceil(2.0 * exp.N)) - 1;
  }
  CompensatedComplexSum sum;
  for (std::int64_t n = lo; n <= hi; ++n) {
    const double weight =
        exp.mode == SumMode::Sharp ? 1.0 : window_eval(exp.N, static_cast<double>(n));
    if (weight == 0.0) continue;
    sum.add(provider.a1n(n) * additive_character(n, exp.alpha) * weight);
  }
  return sum.value();
}

std::int64_t dual_cutoff(double N, double theta_n, double conductor, std::int64_t q,
                         std::int64_t n1, double factor) {
  const double xn = factor * rapid_decay_threshold(N, theta_n, conductor);
  const double q3 = static_cast<double>(q) * static_cast<double>(q) * static_cast<double>(q);
  const double n1sq = static_cast<double>(n1) * static_cast<double>(n1);
  return static_cast<std::int64_t>(std::floor(xn / N * q3 / n1sq));
}

VoronoiReport dual_sum(const CoefficientProvider& provider, const SumExperiment& exp, double tol,
                       const DualSumOptions& options) {
  if (exp.mode != SumMode::Smooth) {
    throw std::invalid_argument("the Voronoi identity applies to smooth sums only");
  }
  const FormSpec& spec = provider.spec();
  const std::int64_t q = exp.approx.q;
  const std::int64_t a = exp.approx.a;
  const double theta = exp.approx.theta;
  const ModulatedWindow win{exp.N, theta, 0.0};
  const double conductor = spec.conductor();
  const unsigned workers = options.workers == 0 ? default_workers() : options.workers;

  VoronoiReport report;
  if (!spec.cuspidal()) {
    report.warnings.emplace_back("polar terms omitted; residual not expected to vanish");
  }

  SumExperiment smooth = exp;
  report.direct = direct_sum(provider, smooth);

  const std::int64_t abar = q == 1 ? 0 : mod_inverse(positive_mod(a, q), q);
  std::vector<std::int64_t> divisors;
  for (std::int64_t d = 1; d <= q; ++d) {
    if (q % d == 0) divisors.push_back(d);
  }
  struct Term {
    std::int64_t n1;
    std::int64_t n2;
  };
  std::vector<Term> terms;
  for (std::int64_t n1 : divisors) {
    const std::int64_t top = dual_cutoff(exp.N, win.theta_n(), conductor, q, n1,
                                         options.cutoff_factor);
    for (std::int64_t n2 = 1; n2 <= top; ++n2) terms.push_back({n1, n2});
  }
  report.dualTermsUsed = static_cast<std::int64_t>(terms.size());
  if (terms.empty()) {
    report.residual = std::abs(report.direct);
    return report;
  }

  const double q3 = static_cast<double>(q) * static_cast<double>(q) * static_cast<double>(q);
  auto x_of = [&](const Term& t) {
    return static_cast<double>(t.n2) * static_cast<double>(t.n1 * t.n1) / q3;
  };
  double x_min = x_of(terms.front());
  double x_max = x_min;
  for (const auto& t : terms) {
    x_min = std::min(x_min, x_of(t));
    x_max = std::max(x_max, x_of(t));
  }
  const double term_tol = tol / static_cast<double>(terms.size());
  const MellinBarnesTransform transform(spec.params(), win, options.sigma, term_tol, x_min, x_max,
                                        workers);

  std::vector<cplx> plus(terms.size());
  std::vector<cplx> minus(terms.size());
  std::vector<double> errors(terms.size());
  parallel_for(terms.size(), workers, [&](std::size_t i) {
    const auto& t = terms[i];
    const std::int64_t c = q / t.n1;
    const cplx coefficient = provider.coeff(t.n2, t.n1) /
                             (static_cast<double>(t.n1) * static_cast<double>(t.n2));
    const double k_plus = kloosterman(positive_mod(abar, c), positive_mod(t.n2, c), c);
    const double k_minus = kloosterman(positive_mod(abar, c), positive_mod(-t.n2, c), c);
    const double x = x_of(t);
    const auto r0 = transform.psi_k(x, 0);
    const auto r1 = transform.psi_k(x, 1);
    const double norm = 1.0 / (2.0 * std::pow(std::numbers::pi, 1.5));
    const cplx psi_plus = norm * (r0.value - cplx(0.0, 1.0) * r1.value);
    const cplx psi_minus = norm * (r0.value + cplx(0.0, 1.0) * r1.value);
    plus[i] = coefficient * k_plus * psi_plus;
    minus[i] = coefficient * k_minus * psi_minus;
    errors[i] = std::max(r0.quadratureError, r1.quadratureError);
  });
  CompensatedComplexSum sp;
  CompensatedComplexSum sm;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    sp.add(plus[i]);
    sm.add(minus[i]);
    report.transformError = std::max(report.transformError, errors[i]);
  }
  report.dualPlus = static_cast<double>(q) * sp.value();
  report.dualMinus = static_cast<double>(q) * sm.value();
  report.residual = std::abs(report.direct - (report.dualPlus + report.dualMinus));
  return report;
}

TkReport T_k(const CoefficientProvider& provider, const SumExperiment& exp, int k, double tol,
             const DualSumOptions& options) {
  const FormSpec& spec = provider.spec();
  const std::int64_t q = exp.approx.q;
  const ModulatedWindow win{exp.N, exp.approx.theta, 0.0};
  const unsigned workers = options.workers == 0 ? default_workers() : options.workers;
  TkReport report;
  report.envelope = predicted_bound(exp.N, spec.conductor(), exp.Q, win.theta_n()).value;
  const std::int64_t top =
      dual_cutoff(exp.N, win.theta_n(), spec.conductor(), q, 1, options.cutoff_factor);
  report.termsUsed = top;
  if (top < 1) return report;
  const double q3 = static_cast<double>(q) * static_cast<double>(q) * static_cast<double>(q);
  const MellinBarnesTransform transform(spec.params(), win, options.sigma,
                                        tol / static_cast<double>(top), 1.0 / q3,
                                        static_cast<double>(top) / q3, workers);
  std::vector<double> terms(static_cast<std::size_t>(top));
  parallel_for(terms.size(), workers, [&](std::size_t i) {
    const auto n = static_cast<std::int64_t>(i) + 1;
    const double x = static_cast<double>(n) / q3;
    terms[i] = std::abs(provider.coeff(n, 1)) / static_cast<double>(n) *
               std::abs(transform.psi_k(x, k).value);
  });
  CompensatedSum sum;
  for (double t : terms) sum.add(t);
  report.value = std::pow(static_cast<double>(q), 1.5 + report.epsilon) * sum.value();
  return report;
}

BoundReport predicted_bound(double N, double conductor, double Q, double theta_n) {
  if (!(N > 0.0) || !(conductor > 0.0) || !(Q > 0.0)) {
    throw std::invalid_argument("predicted_bound needs positive N, conductor and Q");
  }
  BoundReport b;
  const double eps = b.epsilon;
  b.value = std::pow(Q * N, eps) * (std::pow(Q, 1.5) * std::sqrt(conductor) + N / std::sqrt(Q) +
                                    std::pow(N / Q, 1.5));
  b.ramanujan = std::pow(N, 0.75 + eps) * std::pow(conductor, 0.25);
  b.unconditional = std::pow(N, 0.75 + eps) * std::pow(conductor, 5.0 / 12.0);
  const double t = std::abs(theta_n);
  if (t < std::cbrt(conductor)) {
    b.regime = "theta-n<c^1/3";
  } else if (t < std::sqrt(conductor)) {
    b.regime = "c^1/3<=theta-n<c^1/2";
  } else {
    b.regime = "theta-n>=c^1/2";
  }
  return b;
}

namespace {

double ls_slope(const std::vector<double>& x, const std::vector<double>& y, double* intercept) {
  const auto n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  if (intercept) *intercept = (sy - slope * sx) / n;
  return slope;
}

}  // namespace

FitRecord exponent_fit(const CoefficientProvider& provider, const std::vector<double>& N_list,
                       const std::vector<double>& alphas, SumMode mode, unsigned workers) {
  if (N_list.size() < 5) throw std::invalid_argument("exponent_fit needs at least 5 values of N");
  if (alphas.empty()) throw std::invalid_argument("exponent_fit needs at least one alpha");
  const double top = *std::max_element(N_list.begin(), N_list.end());
  if (static_cast<double>(provider.cache_bound()) < 2.0 * top) {
    throw InsufficientData("insufficient data: coefficients needed up to 2 max N");
  }
  if (workers == 0) workers = default_workers();

  const std::size_t rows = N_list.size();
  const std::size_t cols = alphas.size();
  std::vector<double> table(rows * cols);
  parallel_for(rows * cols, workers, [&](std::size_t idx) {
    const std::size_t i = idx / cols;
    const std::size_t j = idx % cols;
    SumExperiment e;
    e.N = N_list[i];
    e.alpha = alphas[j];
    e.mode = mode;
    table[idx] = std::abs(direct_sum(provider, e));
  });

  FitRecord fit;
  fit.N = N_list;
  std::vector<double> log_n(rows);
  std::vector<double> log_m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    double m = 0.0;
    for (std::size_t j = 0; j < cols; ++j) m = std::max(m, table[i * cols + j]);
    fit.maxima.push_back(m);
    log_n[i] = std::log(N_list[i]);
    log_m[i] = std::log(std::max(m, 1e-300));
  }
  fit.slope = ls_slope(log_n, log_m, &fit.intercept);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<double> y(rows);
    for (std::size_t i = 0; i < rows; ++i) y[i] = std::log(std::max(table[i * cols + j], 1e-300));
    fit.perAlphaSlopes.push_back(ls_slope(log_n, y, nullptr));
  }
  return fit;
}

std::vector<double> quadratic_irrationals() {
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const double s5 = std::sqrt(5.0);
  const double s7 = std::sqrt(7.0);
  return {(s5 - 1.0) / 2.0, s2 - 1.0, s3 - 1.0, s5 - 2.0, s7 - 2.0, (std::sqrt(13.0) - 3.0) / 2.0};
}

std::vector<double> mixed_alpha_preset(std::uint64_t seed) {
  std::vector<double> out;
  for (std::int64_t q = 1; q <= 20; ++q) {
    for (std::int64_t a = 0; a < q; ++a) {
      if (gcd(a, q) == 1) out.push_back(static_cast<double>(a) / static_cast<double>(q));
    }
  }
  for (double x : quadratic_irrationals()) out.push_back(x);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int i = 0; i < 100; ++i) out.push_back(uniform(rng));
  return out;
}

}  // namespace gl3twist
