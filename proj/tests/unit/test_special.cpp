#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gl3twist/quadrature.hpp"
#include "gl3twist/special.hpp"

using namespace gl3twist;
using std::numbers::pi;

TEST_CASE("log_gamma agrees with std::lgamma on the positive axis") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.0, 33.3, 170.0}) {
    CHECK(log_gamma(cplx(x, 0.0)).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  }
}

TEST_CASE("|Gamma(1/2 + it)|^2 = pi / cosh(pi t)") {
  for (double t : {0.3, 1.0, 5.0, 40.0, 250.0}) {
    const double lhs = 2.0 * log_gamma(cplx(0.5, t)).real();
    const double rhs = std::log(pi) - (pi * t + std::log1p(std::exp(-2.0 * pi * t)) - std::log(2.0));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("reciprocal gamma") {
  CHECK(rgamma(cplx(0.0)) == cplx(0.0));
  CHECK(rgamma(cplx(-3.0)) == cplx(0.0));
  CHECK(log_rgamma(cplx(-7.0)).zero);
  CHECK(std::abs(rgamma(cplx(5.0)) - 1.0 / 24.0) < 1e-15);
  // Reflection region: 1/Gamma(-1/2) = -1/(2 sqrt(pi)).
  CHECK(std::abs(rgamma(cplx(-0.5)) + 0.5 / std::sqrt(pi)) < 1e-14);
  // Gamma(z) Gamma(1-z) = pi / sin(pi z).
  const cplx z(0.3, 2.0);
  const cplx prod = 1.0 / (rgamma(z) * rgamma(1.0 - z));
  CHECK(std::abs(prod - pi / std::sin(pi * z)) < 1e-12 * std::abs(prod));
}

TEST_CASE("riemann_zeta") {
  CHECK(std::abs(riemann_zeta(cplx(2.0)) - pi * pi / 6.0) < 1e-13);
  CHECK(std::abs(riemann_zeta(cplx(-1.0)) + 1.0 / 12.0) < 1e-13);
  const cplx z = riemann_zeta(cplx(0.5, 3.0));
  CHECK(z.real() == doctest::Approx(0.532736670974232883923384121681).epsilon(1e-12));
  CHECK(z.imag() == doctest::Approx(-0.078896513425833382656205086906).epsilon(1e-12));
}

TEST_CASE("kbessel_ir against high-precision values") {
  const double r = 9.533695261353557554344235235928770;
  CHECK(kbessel_ir(r, 1.0) == doctest::Approx(1.2779928215119844664e-7).epsilon(1e-9));
  CHECK(kbessel_ir(r, 5.0) == doctest::Approx(-2.750707632217390906e-7).epsilon(1e-9));
  CHECK(kbessel_ir(r, 10.0) == doctest::Approx(1.6531176291996911658e-7).epsilon(1e-9));
  CHECK(kbessel_ir(r, 20.0) == doctest::Approx(6.002631092474680695e-11).epsilon(1e-8));
  CHECK(kbessel_ir(2.0, 0.5) == doctest::Approx(0.016502018949481442656).epsilon(1e-10));
  for (double x : {0.1, 1.0, 4.0, 15.0}) {
    CHECK(kbessel_ir(0.0, x) == doctest::Approx(std::cyl_bessel_k(0.0, x)).epsilon(1e-12));
  }
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  GaussLegendre rule(8);
  double sum = 0.0, moment = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i];
    moment += rule.weights[i] * std::pow(rule.nodes[i], 14);
  }
  CHECK(sum == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(moment == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
  CHECK_THROWS_AS(GaussLegendre(0), std::invalid_argument);
}

TEST_CASE("adaptive quadrature resolves an oscillatory integrand") {
  auto f = [](double x) { return std::complex<double>(std::cos(50.0 * x), std::sin(50.0 * x)); };
  const auto r = integrate_adaptive(f, 0.0, 1.0, 1e-12, 10);
  const std::complex<double> exact = (std::exp(std::complex<double>(0.0, 50.0)) - 1.0) /
                                     std::complex<double>(0.0, 50.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - exact) < 1e-12);
}
