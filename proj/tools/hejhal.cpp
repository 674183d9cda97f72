#include "hejhal.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gl3twist/special.hpp"

namespace gl3twist::hejhal {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
  double x, y;
};

// Pull z back into the standard fundamental domain.
Point pullback(double x, double y) {
  for (;;) {
    x -= std::round(x);
    const double r = x * x + y * y;
    if (r >= 1.0 - 1e-15) return {x, y};
    x = -x / r;
    y = y / r;
  }
}

double basis(double r, int n, Point z) {
  return std::sqrt(z.y) * kbessel_ir(r, kTwoPi * n * z.y) * std::sin(kTwoPi * n * z.x);
}

std::vector<double> stage1(const Settings& s) {
  const int m = s.stage1_terms;
  const int q = s.stage1_points;
  const double y = s.stage1_height;
  std::vector<double> xm(q);
  std::vector<Point> pulled(q);
  for (int j = 0; j < q; ++j) {
    xm[j] = (j + 0.5) / (2.0 * q);
    pulled[j] = pullback(xm[j], y);
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (int l = 1; l <= m; ++l) {
    std::vector<double> column(q);
    for (int j = 0; j < q; ++j) column[j] = basis(s.r, l, pulled[j]);
    for (int n = 1; n <= m; ++n) {
      double v = 0.0;
      for (int j = 0; j < q; ++j) v += column[j] * std::sin(kTwoPi * n * xm[j]);
      a(n - 1, l - 1) = -2.0 / q * v;
    }
  }
  for (int n = 1; n <= m; ++n) a(n - 1, n - 1) += std::sqrt(y) * kbessel_ir(s.r, kTwoPi * n * y);
  // c(1) = 1; drop the n = 1 equation.
  const Eigen::MatrixXd lhs = a.block(1, 1, m - 1, m - 1);
  const Eigen::VectorXd rhs = -a.block(1, 0, m - 1, 1);
  const Eigen::VectorXd sol = lhs.partialPivLu().solve(rhs);
  std::vector<double> c(m + 1, 0.0);
  c[1] = 1.0;
  for (int n = 2; n <= m; ++n) c[n] = sol(n - 2);
  return c;
}

}  // namespace

std::vector<double> coefficients(std::int64_t n_max, const Settings& s) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  const std::vector<double> c1 = stage1(s);
  const int terms = s.expansion_terms;
  std::vector<double> c(static_cast<std::size_t>(n_max) + 1, 0.0);
  const std::int64_t direct = std::min<std::int64_t>(n_max, 12);
  for (std::int64_t n = 1; n <= direct; ++n) c[n] = c1[n];

  std::int64_t n0 = direct + 1;
  while (n0 <= n_max) {
    const auto n1 = std::min<std::int64_t>(
        n_max, static_cast<std::int64_t>(std::floor(static_cast<double>(n0) * s.band_ratio)));
    const double y = (s.r + 2.0) / (kTwoPi * static_cast<double>(n0));
    const std::int64_t q = 4 * n1 + 40;
    // f at the pulled-back images of x_m + iY, x_m = (m - 1/2)/(2Q).
    std::vector<double> f(q, 0.0);
    for (std::int64_t j = 0; j < q; ++j) {
      const Point z = pullback((j + 0.5) / (2.0 * q), y);
      double v = 0.0;
      for (int l = 1; l <= terms; ++l) v += c1[l] * basis(s.r, l, z);
      f[j] = v;
    }
    // sin(2 pi n x_m) = sin(pi n (2m - 1) / (2Q)) from a table of period 4Q.
    std::vector<double> table(4 * q);
    for (std::int64_t i = 0; i < 4 * q; ++i) {
      table[i] = std::sin(std::numbers::pi * static_cast<double>(i) / (2.0 * q));
    }
    for (std::int64_t n = n0; n <= n1; ++n) {
      double v = 0.0;
      for (std::int64_t j = 0; j < q; ++j) v += f[j] * table[(n * (2 * j + 1)) % (4 * q)];
      c[n] = 2.0 / q * v / (std::sqrt(y) * kbessel_ir(s.r, kTwoPi * n * y));
    }
    n0 = n1 + 1;
  }
  return c;
}

}  // namespace gl3twist::hejhal
