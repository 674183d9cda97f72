#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "gl3twist/sums.hpp"
#include "gl3twist/transform.hpp"
#include "gl3twist/window.hpp"

using namespace gl3twist;
using std::numbers::pi;

namespace {

FormSpec maass_lift() {
  return FormSpec::sym_square(
      ingest_gl2_table(std::filesystem::path(GL3TWIST_TEST_DATA) / "maass_r9.5337.txt"));
}

// A(1,1) = 1 and nothing else.
FormSpec delta_form(int bound) {
  std::ostringstream text;
  text << "PARAMS 0 0 0\n1 1 1\n";
  for (int n = 2; n <= bound; ++n) text << "1 " << n << " 0\n";
  std::istringstream in(text.str());
  return FormSpec::file_backed(ingest_coefficient_table(in));
}

}  // namespace

TEST_CASE("direct sum examples") {
  const auto spec = FormSpec::eisenstein(LanglandsParams::from(0, 0, 0));
  CoefficientProvider provider(spec, 100);
  auto exp = SumExperiment::make(spec, 10.0, 0.0, 10.0, SumMode::Sharp);
  CHECK(std::abs(direct_sum(provider, exp) - 53.0) < 1e-12);
  exp = SumExperiment::make(spec, 0.5, 0.3, 10.0, SumMode::Sharp);
  CHECK(direct_sum(provider, exp) == cplx(0.0));

  const auto twisted = FormSpec::eisenstein(LanglandsParams::from(0, 0, 0));
  CoefficientProvider p2(twisted, 4000);
  for (SumMode mode : {SumMode::Sharp, SumMode::Smooth}) {
    const cplx a = direct_sum(p2, SumExperiment::make(twisted, 1500.0, 0.2137, 0.0, mode));
    const cplx b = direct_sum(p2, SumExperiment::make(twisted, 1500.0, -0.2137, 0.0, mode));
    CHECK(std::abs(a - std::conj(b)) < 1e-9 * std::abs(a));
  }
}

TEST_CASE("experiment setup") {
  const auto spec = FormSpec::eisenstein(LanglandsParams::from(2, -1, -1));
  const auto exp = SumExperiment::make(spec, 1e4, std::numbers::pi - 3.0);
  CHECK(exp.Q == doctest::Approx(choose_Q(1e4, 12.0)));
  CHECK(exp.approx.q <= exp.Q);
  CHECK(exp.mode == SumMode::Smooth);
}

TEST_CASE("mean square over a full grid") {
  const auto spec = FormSpec::eisenstein(LanglandsParams::from(2, -1, -1));
  CoefficientProvider provider(spec, 600);
  const double N = 256.0;
  const int M = 600;  // > 2N distinct frequencies
  double mean = 0.0;
  for (int j = 0; j < M; ++j) {
    const auto exp = SumExperiment::make(spec, N, static_cast<double>(j) / M, 0.0, SumMode::Smooth);
    mean += std::norm(direct_sum(provider, exp));
  }
  mean /= M;
  double parseval = 0.0;
  for (int n = 257; n < 512; ++n) parseval += std::pow(window_eval(N, n), 2) * std::norm(provider.a1n(n));
  CHECK(mean == doctest::Approx(parseval).epsilon(1e-10));
}

TEST_CASE("dual cutoff arithmetic") {
  const double N = 200.0, c = 402.7;
  const double U = envelope_U(c, 0.0);
  for (std::int64_t q : {1, 2, 3}) {
    const auto top = dual_cutoff(N, 0.0, c, q, 1);
    CHECK(top == static_cast<std::int64_t>(std::floor(q * q * q * U * std::pow(N, 0.2) / N)));
    CHECK(dual_cutoff(N, 0.0, c, q, 1, 2.0) >= 2 * top);
  }
}

TEST_CASE("Eisenstein dual side carries a warning") {
  const auto spec = FormSpec::eisenstein(LanglandsParams::from(0, 0, 0));
  CoefficientProvider provider(spec, 1000);
  const auto exp = SumExperiment::make(spec, 60.0, 0.0, 1.0);
  const auto rep = dual_sum(provider, exp, 1e-6);
  REQUIRE(rep.warnings.size() == 1);
  CHECK(rep.warnings[0] == "polar terms omitted; residual not expected to vanish");
  CHECK(rep.residual == doctest::Approx(std::abs(rep.direct - rep.dualPlus - rep.dualMinus)));
  CHECK_THROWS_AS(dual_sum(provider, SumExperiment::make(spec, 60.0, 0.0, 1.0, SumMode::Sharp)),
                  std::invalid_argument);
}

TEST_CASE("Voronoi identity for the symmetric-square lift") {
  const auto spec = maass_lift();
  CoefficientProvider provider(spec, 20000);
  const auto exp = SumExperiment::make(spec, 200.0, 1.0 / 3.0, 3.0);
  REQUIRE(exp.approx.q == 3);
  const auto rep = dual_sum(provider, exp, 1e-8);
  CHECK(rep.warnings.empty());
  CHECK(rep.dualTermsUsed > 0);
  CHECK(rep.residual <= 1e-3 * (std::abs(rep.direct) + 1.0));
}

TEST_CASE("T_k") {
  const auto spec = maass_lift();
  CoefficientProvider provider(spec, 20000);
  const auto exp = SumExperiment::make(spec, 200.0, 0.0, 1.0);
  for (int k : {0, 1}) {
    const auto r = T_k(provider, exp, k, 1e-8);
    CHECK(r.value >= 0.0);
    CHECK(r.termsUsed == dual_cutoff(200.0, 0.0, spec.conductor(), 1, 1));
    CHECK(r.epsilon == 0.1);
    CHECK(r.envelope > 0.0);
    DualSumOptions wide;
    wide.cutoff_factor = 1.5;
    const auto longer = T_k(provider, exp, k, 1e-8, wide);
    CHECK(longer.value >= r.value);
  }
}

TEST_CASE("predicted bound") {
  const double N = 1e4;
  const auto b = predicted_bound(N, 1.0, std::sqrt(N), 0.0);
  const double eps = std::pow(std::sqrt(N) * N, 0.05);
  CHECK(b.value == doctest::Approx(3.0 * std::pow(N, 0.75) * eps));
  CHECK(b.epsilon == 0.05);

  const auto big = predicted_bound(N, 1e6, choose_Q(N, 1e6), 0.0);
  CHECK(big.unconditional / big.ramanujan == doctest::Approx(10.0));  // (1e6)^{1/6}

  // Grid minimum near N^{1/2} c^{-1/6}.
  const double c = 1e3, Nn = 1e8;
  double best_Q = 0.0, best = INFINITY;
  for (double logQ = 0.0; logQ <= std::log(Nn); logQ += 0.01) {
    const double v = predicted_bound(Nn, c, std::exp(logQ), 0.0).value;
    if (v < best) best = v, best_Q = std::exp(logQ);
  }
  CHECK(std::abs(std::log(best_Q / choose_Q(Nn, c))) < 0.5);

  CHECK(predicted_bound(N, 1e6, 10.0, 5.0).regime == "theta-n<c^1/3");
  CHECK(predicted_bound(N, 1e6, 10.0, 500.0).regime == "c^1/3<=theta-n<c^1/2");
  CHECK(predicted_bound(N, 1e6, 10.0, 5000.0).regime == "theta-n>=c^1/2");
}

TEST_CASE("exponent fits") {
  std::vector<double> Ns;
  for (int e = 8; e <= 14; ++e) Ns.push_back(std::ldexp(1.0, e));

  CoefficientProvider delta(delta_form(256), 256);
  const auto flat_fit = exponent_fit(delta, {8, 16, 32, 64, 128}, {0.0, 0.3});
  CHECK(std::abs(flat_fit.slope) < 1e-12);

  CoefficientProvider divisor(FormSpec::eisenstein(LanglandsParams::from(0, 0, 0)), 1 << 15);
  const auto control = exponent_fit(divisor, Ns, {0.0});
  // sum_{n <= x} tau_3(n) = x P(log x) + O(x^{1/2+}) with
  // P(L) = L^2/2 + (3 gamma - 1) L + 3 gamma^2 - 3 gamma + 3 gamma_1 + 1.
  // Over 2^8..2^14 the log-log slope of x P(log x) is about 1.24.
  const double g = 0.57721566490153286, g1 = -0.072815845483676725;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double N : Ns) {
    const double L = std::log(N);
    const double y = std::log(N * (0.5 * L * L + (3 * g - 1) * L + 3 * g * g - 3 * g + 3 * g1 + 1));
    sx += L, sy += y, sxx += L * L, sxy += L * y;
  }
  const double k = static_cast<double>(Ns.size());
  const double main_term_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  CHECK(control.slope == doctest::Approx(main_term_slope).epsilon(0.02));
  CHECK(control.slope > 1.0);
  CHECK(control.maxima.size() == Ns.size());

  CoefficientProvider twisted(FormSpec::eisenstein(LanglandsParams::from(2, -1, -1)), 1 << 15);
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto fit = exponent_fit(twisted, Ns, {golden});
  MESSAGE("golden-ratio slope " << fit.slope);
  CHECK(fit.slope <= 0.80);
  REQUIRE(fit.perAlphaSlopes.size() == 1);
  CHECK(fit.perAlphaSlopes[0] == doctest::Approx(fit.slope));

  CHECK_THROWS(exponent_fit(twisted, {256, 512, 1024}, {golden}));
  CoefficientProvider small(FormSpec::eisenstein(LanglandsParams::from(2, -1, -1)), 1000);
  CHECK_THROWS(exponent_fit(small, Ns, {golden}));
}

TEST_CASE("alpha presets") {
  const auto mixed = mixed_alpha_preset();
  CHECK(mixed.size() == 128 + 6 + 100);
  CHECK(mixed == mixed_alpha_preset());
  CHECK(quadratic_irrationals().size() == 6);
}
