#include "gl3twist/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace gl3twist {
namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,        1.0 / 1260.0,         -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,   1.0 / 156.0,          -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0};

// B_{2k}, k = 1..13
constexpr std::array<double, 13> kBernoulli = {
    1.0 / 6.0,        -1.0 / 30.0,       1.0 / 42.0,          -1.0 / 30.0,
    5.0 / 66.0,       -691.0 / 2730.0,   7.0 / 6.0,           -3617.0 / 510.0,
    43867.0 / 798.0,  -174611.0 / 330.0, 854513.0 / 138.0,    -236364091.0 / 2730.0,
    8553103.0 / 6.0};

cplx stirling(cplx z) {
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
}

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

cplx log_sin_pi(cplx z) {
  const double y = z.imag();
  const cplx w = kPi * z;
  const cplx i(0.0, 1.0);
  if (std::abs(y) < 1.0) return std::log(std::sin(w));
  if (y > 0.0) {
    // sin w = (i/2) e^{-iw} (1 - e^{2iw})
    return -i * w + std::log(cplx(0.0, 0.5)) + std::log(1.0 - std::exp(2.0 * i * w));
  }
  // sin w = (-i/2) e^{iw} (1 - e^{-2iw})
  return i * w + std::log(cplx(0.0, -0.5)) + std::log(1.0 - std::exp(-2.0 * i * w));
}

cplx log_gamma(cplx z) {
  if (z.real() < 0.5) {
    return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  cplx shift = 0.0;
  while (z.real() < 15.0 && std::abs(z.imag()) < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

LogReciprocalGamma log_rgamma(cplx z) {
  if (is_nonpositive_integer(z)) return {cplx(0.0), true};
  if (z.real() >= 0.5) return {-log_gamma(z), false};
  // 1/Gamma(z) = Gamma(1-z) sin(pi z) / pi
  return {log_gamma(1.0 - z) + log_sin_pi(z) - std::log(kPi), false};
}

cplx rgamma(cplx z) {
  const auto r = log_rgamma(z);
  if (r.zero) return 0.0;
  return std::exp(r.value);
}

cplx riemann_zeta(cplx s) {
  const int n = 12 + static_cast<int>(std::ceil(std::abs(s.imag())));
  cplx sum = 0.0;
  for (int k = 1; k < n; ++k) sum += std::exp(-s * std::log(static_cast<double>(k)));
  const double logn = std::log(static_cast<double>(n));
  const cplx npow = std::exp(-s * logn);
  sum += npow * static_cast<double>(n) / (s - 1.0) + 0.5 * npow;

  // sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * n^{-s-2k+1}
  cplx poch = s;
  cplx term_pow = npow / static_cast<double>(n);
  double factorial = 2.0;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    sum += kBernoulli[k - 1] / factorial * poch * term_pow;
    const double a = 2.0 * static_cast<double>(k);
    poch *= (s + a - 1.0) * (s + a);
    term_pow /= static_cast<double>(n) * static_cast<double>(n);
    factorial *= (a + 1.0) * (a + 2.0);
  }
  return sum;
}

double kbessel_ir(double r, double x) {
  if (x > 700.0) return 0.0;
  const double tmax = std::acosh(std::max(1.0, 745.0 / x));
  const double h = std::min(0.02, 0.25 / std::max(1.0, std::abs(r)));
  double sum = 0.5 * std::exp(-x);
  const int steps = static_cast<int>(tmax / h) + 1;
  for (int j = 1; j <= steps; ++j) {
    const double t = j * h;
    sum += std::exp(-x * std::cosh(t)) * std::cos(r * t);
  }
  return h * sum;
}

}  // namespace gl3twist
