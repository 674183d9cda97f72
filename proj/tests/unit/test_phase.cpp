#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gl3twist/error.hpp"
#include "gl3twist/phase.hpp"

using namespace gl3twist;
using std::numbers::pi;

namespace {

LanglandsParams random_params(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  const double x = u(rng), y = u(rng);
  return LanglandsParams::from(x, y, -x - y);
}

}  // namespace

TEST_CASE("C_poly") {
  const auto a = LanglandsParams::from(2, -1, -1);
  CHECK(C_poly(a, 0.0) == doctest::Approx(2.0));
  CHECK(C_poly(a, 1.0) == doctest::Approx(0.0));
  for (double t = -10.0; t <= 10.0; t += 0.37) {
    const double cubic = t * t * t - 3.0 * t + 2.0;
    CHECK(C_poly(a, t) == doctest::Approx(cubic).epsilon(1e-12));
  }
}

TEST_CASE("f_eval examples") {
  const auto zero = LanglandsParams::from(0, 0, 0);
  const double theta = 0.02;
  PhaseContext ctx(theta / (pi * pi * pi), 1000.0, theta, zero);
  CHECK(f_eval(ctx, 1.0) == doctest::Approx(-1.0 + 3.0 * (1.0 + std::log(2.0))).epsilon(1e-13));
  PhaseContext scaled(5.0 * ctx.x, ctx.N / 5.0 * 5.0, 5.0 * theta, zero);
  CHECK(f_eval(scaled, 1.7) == doctest::Approx(f_eval(ctx, 1.7)).epsilon(1e-13));

  const auto a = LanglandsParams::from(2, -1, -1);
  PhaseContext c2(0.5, 1000.0, 0.05, a);
  const double h = 1e-4;
  CHECK((f_eval(c2, 10 + h) - f_eval(c2, 10 - h)) / (2 * h) ==
        doctest::Approx(f_prime(c2, 10.0)).epsilon(1e-6));
  CHECK_THROWS_AS(f_eval(c2, 0.0), PhaseSingularity);
  CHECK_THROWS_AS(f_eval(c2, 1.0), PhaseSingularity);
  CHECK_THROWS_AS(f_prime(c2, -2.0), PhaseSingularity);
  CHECK_THROWS_AS(PhaseContext(0.5, 1000.0, 0.0, a), std::invalid_argument);
}

TEST_CASE("f_prime at unit and e ratios") {
  const auto a = LanglandsParams::from(2, -1, -1);
  const double N = 1000.0, theta = 0.05, t = 7.0;
  // choose x so that 8 pi^3 x N |t| = |theta N C(t)|
  const double x0 = std::abs(theta * N * C_poly(a, t)) / (8 * pi * pi * pi * N * t);
  CHECK(std::abs(f_prime(PhaseContext(x0, N, theta, a), t)) < 1e-13);
  CHECK(f_prime(PhaseContext(std::exp(1.0) * x0, N, theta, a), t) == doctest::Approx(1.0));
  CHECK(std::abs(delta(PhaseContext(x0, N, theta, a), t)) < 1e-10);
}

TEST_CASE("f_second closed forms") {
  const auto a = LanglandsParams::from(2, -1, -1);
  PhaseContext ctx(0.5, 1000.0, 0.05, a);
  CHECK(f_second(ctx, 2.0) == doctest::Approx(-1.75));
  CHECK(f_second_partial_fractions(ctx, 2.0) == doctest::Approx(-1.75));
  PhaseContext flat(0.5, 1000.0, 0.05, LanglandsParams::from(0, 0, 0));
  CHECK(f_second(flat, 1.0) == doctest::Approx(-2.0));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> tdist(-60.0, 60.0);
  for (int i = 0; i < 1000; ++i) {
    PhaseContext c(0.3, 500.0, 0.1, random_params(rng, 20.0));
    const double t = tdist(rng);
    const double closed = f_second(c, t);
    const double pf = f_second_partial_fractions(c, t);
    REQUIRE(std::abs(closed - pf) <= 1e-10 * std::max(1.0, std::abs(closed)));
  }
}

TEST_CASE("finite differences of f and f'") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> tdist(-200.0, 200.0);
  std::uniform_real_distribution<double> xdist(0.01, 10.0);
  for (int i = 0; i < 1000; ++i) {
    PhaseContext c(xdist(rng), 1000.0, 0.05, random_params(rng, 30.0));
    const double t = tdist(rng);
    const double h = 1e-4 * std::abs(t);
    const auto v = c.params.values();
    bool near_singular = std::abs(t) < 1.0;
    for (double aj : v) near_singular = near_singular || std::abs(t + aj) < 1.0;
    if (near_singular) continue;
    const double fd1 = (f_eval(c, t + h) - f_eval(c, t - h)) / (2 * h);
    const double fp = f_prime(c, t);
    REQUIRE(std::abs(fd1 - fp) <= 1e-5 * std::max(1.0, std::abs(fp)));
    const double fd2 = (f_prime(c, t + h) - f_prime(c, t - h)) / (2 * h);
    const double fs = f_second(c, t);
    REQUIRE(std::abs(fd2 - fs) <= 1e-5 * std::max(1.0, std::abs(fs)) + 1e-7);
  }
}

TEST_CASE("delta consistency") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> tdist(5.0, 80.0);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_params(rng, 3.0);
    PhaseContext c(0.2, 1000.0, -0.03, p);
    const double t = tdist(rng);
    const double prod = std::abs(C_poly(p, t));
    const double rhs = std::log1p(8 * pi * pi * pi * std::abs(t) * delta(c, t) /
                                  (std::abs(c.theta_n()) * prod));
    REQUIRE(std::abs(f_prime(c, t) - rhs) < 1e-10);
  }
  // xN -> 0 boundary
  PhaseContext tiny(1e-300, 1000.0, 0.05, LanglandsParams::from(2, -1, -1));
  CHECK(delta(tiny, 3.0) ==
        doctest::Approx(-50.0 * std::abs(C_poly(tiny.params, 3.0)) / (8 * pi * pi * pi * 3.0)));
}

TEST_CASE("f'' against t^2/C(t) for large t") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_params(rng, 40.0);
    const double c = (1 + std::abs(p.a1)) * (1 + std::abs(p.a2)) * (1 + std::abs(p.a3));
    PhaseContext ctx(1.0, 1000.0, 0.1, p);
    for (double s : {1.0, 2.0, 10.0}) {
      for (double sign : {-1.0, 1.0}) {
        const double t = sign * s * std::sqrt(c);
        const double ratio = f_second(ctx, t) * C_poly(p, t) / (t * t);
        REQUIRE(ratio >= -3.0 - 1e-9);
        REQUIRE(ratio <= -1.0 + 1e-9);
      }
    }
  }
}

TEST_CASE("real cubic roots") {
  auto r = real_cubic_roots(-3.0, 2.0);  // (t - 1)^2 (t + 2)
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(-2.0));
  CHECK(r[1] == doctest::Approx(1.0));
  r = real_cubic_roots(0.0, -8.0);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == doctest::Approx(2.0));
  r = real_cubic_roots(-7.0, 6.0);  // 1, 2, -3
  REQUIRE(r.size() == 3);
  CHECK(r[0] == doctest::Approx(-3.0));
  CHECK(r[2] == doctest::Approx(2.0));
}

TEST_CASE("stationary points") {
  const auto zero = LanglandsParams::from(0, 0, 0);
  PhaseContext ctx(0.5, 1000.0, 0.05, zero);
  const auto pts = stationary_points(ctx, 0.5, 1000.0);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == doctest::Approx(std::sqrt(8 * pi * pi * pi * 500.0 / 50.0)).epsilon(1e-10));

  CHECK(stationary_points(ctx, 100.0, 200.0).empty());

  const auto a = LanglandsParams::from(7, -2, -5);
  PhaseContext c2(0.8, 1000.0, 0.05, a);
  const auto roots = stationary_points(c2, -500.0, 500.0);
  CHECK(!roots.empty());
  for (double r : roots) {
    CHECK(std::abs(f_prime(c2, r)) <= 1e-9);
    const double d = 1e-6 * std::abs(r);
    CHECK(f_prime(c2, r - d) * f_prime(c2, r + d) < 0.0);
  }
}

TEST_CASE("dyadic cells") {
  const auto zero = LanglandsParams::from(0, 0, 0);
  auto cell = dyadic_cells(zero, 1.0, 0.0, 100.0);
  REQUIRE(cell.intervals.size() == 1);
  CHECK(cell.intervals[0].lo == doctest::Approx(1.0));
  CHECK(cell.intervals[0].hi == doctest::Approx(std::cbrt(2.0)));

  const auto a = LanglandsParams::from(2, -1, -1);
  cell = dyadic_cells(a, 8.0, -50.0, 50.0);
  CHECK(cell.intervals.size() <= 6);
  // endpoints solve t^3 - 3t + 2 = +-8, +-16
  for (const auto& iv : cell.intervals) {
    for (double e : {iv.lo, iv.hi}) {
      const double v = std::abs(C_poly(a, e));
      CHECK((std::abs(v - 8.0) < 1e-9 || std::abs(v - 16.0) < 1e-9));
    }
  }
  for (double t = -50.0; t <= 50.0; t += 0.01) {
    const double v = std::abs(C_poly(a, t));
    bool inside = false;
    for (const auto& iv : cell.intervals) inside = inside || (t >= iv.lo && t < iv.hi);
    if (v > 8.0 + 1e-9 && v < 16.0 - 1e-9) REQUIRE(inside);
    if (v < 8.0 - 1e-9 || v > 16.0 + 1e-9) REQUIRE(!inside);
  }
  CHECK_THROWS_AS(dyadic_cells(a, 0.5, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("dyadic cells tile the range") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_params(rng, 50.0);
    const auto cells = dyadic_decomposition(p, -300.0, 300.0);
    double covered = 0.0;
    for (const auto& c : cells) {
      REQUIRE(c.intervals.size() <= 6);
      for (const auto& iv : c.intervals) covered += iv.length();
    }
    // length of {|C| >= 1} on the range, by fine sampling
    const int steps = 600000;
    double expected = 0.0;
    const double h = 600.0 / steps;
    for (int i = 0; i < steps; ++i) {
      if (std::abs(C_poly(p, -300.0 + (i + 0.5) * h)) >= 1.0) expected += h;
    }
    REQUIRE(covered == doctest::Approx(expected).epsilon(1e-4));
  }
  std::mt19937_64 rng2(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = random_params(rng2, 100.0);
    const double M = std::ldexp(1.0, trial % 21);
    REQUIRE(dyadic_cells(p, M, -1e3, 1e3).intervals.size() <= 6);
  }
}
