#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace gl3twist {

struct QuadResult {
  std::complex<double> value;
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

namespace detail {

// Kronrod 15-point abscissae (descending, last is the centre) and weights,
// and the embedded 7-point Gauss weights for abscissae 1, 3, 5, 7.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  std::complex<double> value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment gk15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const std::complex<double> fc = f(centre);
  std::complex<double> kronrod = fc * kWgk[7];
  std::complex<double> gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const std::complex<double> s = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[j] * s;
    if (j % 2 == 1) gauss += kWg[j / 2] * s;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of a real- or
/// complex-valued integrand. The interval is first cut into
/// `initial_panels` equal pieces so that oscillatory integrands start with
/// at least one panel per period.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                              std::size_t initial_panels = 1,
                              std::size_t max_evaluations = 4'000'000) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  initial_panels = std::max<std::size_t>(1, initial_panels);
  std::priority_queue<detail::Segment> heap;
  std::complex<double> total = 0.0;
  double error = 0.0;
  const double width = (b - a) / static_cast<double>(initial_panels);
  for (std::size_t i = 0; i < initial_panels; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = (i + 1 == initial_panels) ? b : lo + width;
    auto seg = detail::gk15(f, lo, hi);
    total += seg.value;
    error += seg.error;
    heap.push(seg);
  }
  out.evaluations = 15 * initial_panels;
  while (error > abs_tol && out.evaluations + 30 <= max_evaluations) {
    const auto worst = heap.top();
    if (worst.b - worst.a < 1e-13 * std::abs(b - a)) break;
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::gk15(f, worst.a, mid);
    auto right = detail::gk15(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Recompute the error from scratch; the running sum drifts.
  error = 0.0;
  std::complex<double> exact_total = 0.0;
  while (!heap.empty()) {
    error += heap.top().error;
    exact_total += heap.top().value;
    heap.pop();
  }
  out.value = exact_total;
  out.error = error;
  out.converged = error <= abs_tol;
  return out;
}

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], computed
/// by Newton iteration in the precision of Real.
template <class Real>
void gauss_legendre_rule(int n, std::vector<Real>& nodes, std::vector<Real>& weights) {
  nodes.assign(n, Real(0));
  weights.assign(n, Real(0));
  const Real pi = Real(3.14159265358979323846264338327950288L);
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Real x = std::cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
    Real dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      Real p0 = 1;
      Real p1 = x;
      for (int k = 2; k <= n; ++k) {
        const Real p2 = ((Real(2 * k) - 1) * x * p1 - Real(k - 1) * p0) / Real(k);
        p0 = p1;
        p1 = p2;
      }
      dp = Real(n) * (x * p1 - p0) / (x * x - 1);
      const Real dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 4 * eps) break;
    }
    if (n == 1) dp = 1;
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2 / ((1 - x * x) * dp * dp);
  }
  if (n % 2 == 1) nodes[n / 2] = 0;
}

/// n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendre(int n);
};

}  // namespace gl3twist
