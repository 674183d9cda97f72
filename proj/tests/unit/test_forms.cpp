#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "gl3twist/arith.hpp"
#include "gl3twist/error.hpp"
#include "gl3twist/forms.hpp"

using namespace gl3twist;

namespace {

// sum over ordered d1 d2 d3 = n of d1^{i a1} d2^{i a2} d3^{i a3}
cplx ordered_factorization_sum(const LanglandsParams& a, std::int64_t n) {
  cplx total = 0.0;
  for (std::int64_t d1 = 1; d1 <= n; ++d1) {
    if (n % d1) continue;
    const std::int64_t r = n / d1;
    for (std::int64_t d2 = 1; d2 <= r; ++d2) {
      if (r % d2) continue;
      const double d3 = static_cast<double>(r / d2);
      const double phase = a.a1 * std::log(double(d1)) + a.a2 * std::log(double(d2)) +
                           a.a3 * std::log(d3);
      total += std::polar(1.0, phase);
    }
  }
  return total;
}

GL2EigenvalueTable load_fixture() {
  return ingest_gl2_table(std::filesystem::path(GL3TWIST_TEST_DATA) / "maass_r9.5337.txt");
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("analytic_conductor") {
  CHECK(analytic_conductor(LanglandsParams::from(0, 0, 0)) == 1.0);
  CHECK(analytic_conductor(LanglandsParams::from(2, -1, -1)) == 12.0);
  CHECK(analytic_conductor(LanglandsParams::from(6, 0, -6)) == 49.0);
  CHECK_THROWS_AS(LanglandsParams::from(1, 1, 1), std::invalid_argument);
}

TEST_CASE("sym_square_satake") {
  auto s = sym_square_satake(2.0);
  for (const auto& b : s.beta) CHECK(std::abs(b - 1.0) < 1e-12);
  s = sym_square_satake(0.0);
  CHECK(std::abs(s.beta[0] + 1.0) < 1e-12);
  CHECK(std::abs(s.beta[1] - 1.0) < 1e-12);
  CHECK(std::abs(s.beta[2] + 1.0) < 1e-12);
  s = sym_square_satake(1.0);
  const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  CHECK(std::abs(s.beta[0] - w) < 1e-12);
  CHECK(std::abs(s.beta[2] - std::conj(w)) < 1e-12);
  // Non-tempered input: complex alpha is allowed, product still 1.
  s = sym_square_satake(2.5);
  CHECK(std::abs(s.beta[0] * s.beta[1] * s.beta[2] - 1.0) < 1e-12);
}

TEST_CASE("Eisenstein coefficient examples") {
  const auto spec = FormSpec::eisenstein(LanglandsParams::from(0, 0, 0));
  CHECK(std::abs(coeff(spec, 1, 2) - 3.0) < 1e-12);
  CHECK(std::abs(coeff(spec, 1, 4) - 6.0) < 1e-12);
  CHECK(std::abs(coeff(spec, 1, 100) - 36.0) < 1e-12);
  CHECK(std::abs(coeff(spec, 1, 12) - 18.0) < 1e-12);
}

TEST_CASE("Schur evaluation equals the ordered factorization sum") {
  const auto params = LanglandsParams::from(2, -1, -1);
  CoefficientProvider provider(FormSpec::eisenstein(params), 10000);
  double worst = 0.0;
  for (std::int64_t n = 1; n <= 10000; ++n) {
    const cplx ref = ordered_factorization_sum(params, n);
    worst = std::max(worst, std::abs(provider.a1n(n) - ref) / (1.0 + std::abs(ref)));
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("Hecke relation, duality and multiplicativity for every provider") {
  std::vector<FormSpec> specs{FormSpec::eisenstein(LanglandsParams::from(0, 0, 0)),
                              FormSpec::eisenstein(LanglandsParams::from(2, -1, -1)),
                              FormSpec::eisenstein(LanglandsParams::from(7.3, -2.1, -5.2)),
                              FormSpec::sym_square(load_fixture())};
  for (const auto& spec : specs) {
    CAPTURE(spec.describe());
    CoefficientProvider provider(spec, 10000);
    for (int p = 2; p <= 100; ++p) {
      if (!is_prime(p)) continue;
      const cplx lhs = provider.coeff(1, p) * provider.coeff(1, p);
      const cplx rhs = provider.coeff(1, p * p) + provider.coeff(p, 1);
      REQUIRE(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
    }
    for (int m = 1; m <= 50; ++m) {
      for (int n = 1; n <= 50; ++n) {
        REQUIRE(std::abs(provider.coeff(n, m) - std::conj(provider.coeff(m, n))) < 1e-10);
      }
    }
    for (int m = 1; m <= 100; ++m) {
      for (int n = 1; n <= 100; ++n) {
        if (gcd(m, n) != 1) continue;
        const cplx prod = provider.a1n(m) * provider.a1n(n);
        REQUIRE(std::abs(prod - provider.a1n(m * n)) <= 1e-10 * std::max(1.0, std::abs(prod)));
      }
    }
  }
}

TEST_CASE("sym-square A(1,p) = lambda_p^2 - 1") {
  const auto table = load_fixture();
  const auto spec = FormSpec::sym_square(table);
  CHECK(spec.params().a1 == doctest::Approx(2.0 * table.r));
  CHECK(spec.conductor() == doctest::Approx(402.70016).epsilon(1e-7));
  for (std::int64_t p : {2, 3, 5, 7, 97, 19997}) {
    const double lp = table.lambda.at(p);
    CHECK(std::abs(coeff(spec, 1, p) - (lp * lp - 1.0)) < 1e-12);
  }
  CoefficientProvider provider(spec, 100);
  CHECK_THROWS_AS(provider.coeff(1, 20011), InsufficientData);
}

TEST_CASE("GL(2) table ingestion") {
  std::istringstream ok("R 9.53369\n# comment\n2 1.10669\n");
  const auto t = ingest_gl2_table(ok);
  CHECK(t.r == doctest::Approx(9.53369));
  CHECK(t.lambda.at(2) == doctest::Approx(1.10669));
  CHECK(t.warnings.empty());

  std::istringstream empty("R 9.53369\n");
  CHECK_THROWS_WITH_AS(ingest_gl2_table(empty), doctest::Contains("no eigenvalue entries"), ParseError);
  std::istringstream dup("R 1\n2 0.5\n2 0.5\n");
  CHECK_THROWS_WITH_AS(ingest_gl2_table(dup), doctest::Contains("duplicate entry"), ParseError);
  std::istringstream gap("R 1\n2 0.5\n5 0.1\n");
  CHECK_THROWS_AS(ingest_gl2_table(gap), ParseError);
  std::istringstream junk("R 1\n2 abc\n");
  CHECK_THROWS_AS(ingest_gl2_table(junk), ParseError);
  std::istringstream big("R 1\n2 2.5\n3 0.1\n");
  const auto flagged = ingest_gl2_table(big);
  CHECK(flagged.warnings.size() == 1);

  std::ostringstream out;
  write_gl2_table(out, t, "round trip");
  std::istringstream back(out.str());
  const auto again = ingest_gl2_table(back);
  CHECK(again.r == t.r);
  CHECK(again.lambda == t.lambda);
}

TEST_CASE("file-backed forms report missing data") {
  std::istringstream in("PARAMS 0 0 0\n1 1 1\n1 2 3 0\n");
  const auto spec = FormSpec::file_backed(ingest_coefficient_table(in));
  CHECK(std::abs(coeff(spec, 1, 2) - 3.0) < 1e-15);
  CHECK_THROWS_WITH_AS(coeff(spec, 1, 3), doctest::Contains("insufficient data"), InsufficientData);
}

TEST_CASE("short sums") {
  CoefficientProvider flat(FormSpec::eisenstein(LanglandsParams::from(0, 0, 0)), 2000);
  CHECK(short_sum_ratio(flat, 100, 0).value == doctest::Approx(36.0 / 100.0));
  CHECK(short_sum_ratio(flat, 100.5, 0.2).value == 0.0);

  CoefficientProvider twisted(FormSpec::eisenstein(LanglandsParams::from(2, -1, -1)), 200000);
  for (double A : {1e3, 1e4, 1e5}) {
    for (double B : {A / 100, A / 10, A}) {
      const auto r = short_sum_ratio(twisted, A, B, 0.1);
      CHECK(r.value <= 10.0 * r.envelope_half);
    }
  }
}

TEST_CASE("Rankin-Selberg partial sums") {
  CoefficientProvider flat(FormSpec::eisenstein(LanglandsParams::from(0, 0, 0)), 100);
  CHECK(rankin_selberg_partial(flat, 2.0) == doctest::Approx(1.0 + 9.0 / 2.0));
  CHECK(rankin_selberg_partial(flat, 1.0) == doctest::Approx(1.0));

  CoefficientProvider twisted(FormSpec::eisenstein(LanglandsParams::from(2, -1, -1)), 10000);
  const double L = std::log(1e4);
  const double v = rankin_selberg_partial(twisted, 1e4);
  CHECK(v >= 0.5 * L);
  CHECK(v <= std::pow(L, 5));
}
