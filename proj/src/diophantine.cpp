#include "gl3twist/diophantine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gl3twist {
namespace {

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

struct Candidate {
  std::int64_t a;
  std::int64_t q;
  long double gap;  // alpha - a/q
};

Candidate make_candidate(long double alpha, std::int64_t a, std::int64_t q) {
  return {a, q, (static_cast<long double>(q) * alpha - static_cast<long double>(a)) /
                    static_cast<long double>(q)};
}

}  // namespace

double RationalApproximation::bound() const {
  return static_cast<double>(kTwoPi / (static_cast<long double>(q) * Q));
}

RationalApproximation dirichlet_approx(double alpha, double Q) {
  if (!(Q >= 1.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("dirichlet_approx needs finite alpha and Q >= 1");
  }
  const auto qmax = static_cast<std::int64_t>(std::floor(Q));
  const long double x0 = alpha;

  std::vector<Candidate> candidates;
  std::int64_t h_prev2 = 0, h_prev = 1;  // numerators h_{i-2}, h_{i-1}
  std::int64_t k_prev2 = 1, k_prev = 0;  // denominators
  long double x = x0;
  for (int iter = 0; iter < 64; ++iter) {
    const long double fl = std::floor(x);
    const long double k_exact = fl * static_cast<long double>(k_prev) + k_prev2;
    const auto term = iter == 0 ? static_cast<std::int64_t>(fl)
                                : static_cast<std::int64_t>(
                                      std::min(fl, static_cast<long double>(qmax + 1)));
    if (iter > 0 && (term <= 0 || k_exact > static_cast<long double>(qmax))) {
      // intermediate fractions between the last two convergents
      for (std::int64_t j = 1; j < term; ++j) {
        const std::int64_t kj = k_prev2 + j * k_prev;
        if (kj > qmax) break;
        candidates.push_back(make_candidate(x0, h_prev2 + j * h_prev, kj));
      }
      break;
    }
    const std::int64_t k = term * k_prev + k_prev2;
    const std::int64_t h = term * h_prev + h_prev2;
    candidates.push_back(make_candidate(x0, h, k));
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const long double frac = x - fl;
    if (frac <= 1e-18L * std::max(1.0L, std::abs(x))) break;
    x = 1.0L / frac;
  }

  const Candidate* best = nullptr;
  for (const auto& c : candidates) {
    const long double limit = 1.0L / (static_cast<long double>(c.q) * Q);
    if (std::abs(c.gap) > limit * (1.0L + 1e-12L)) continue;
    if (best == nullptr || std::abs(c.gap) < std::abs(best->gap) ||
        (std::abs(c.gap) == std::abs(best->gap) && c.q < best->q)) {
      best = &c;
    }
  }
  Candidate fallback{0, 1, 0.0L};
  if (best == nullptr) {
    // Unreachable by Dirichlet's theorem; scan as a last resort.
    for (std::int64_t q = 1; q <= qmax; ++q) {
      const auto a = static_cast<std::int64_t>(std::llround(x0 * static_cast<long double>(q)));
      const auto c = make_candidate(x0, a, q);
      if (best == nullptr || std::abs(c.gap) < std::abs(best->gap)) {
        fallback = c;
        best = &fallback;
      }
    }
  }
  return {best->a, best->q, static_cast<double>(kTwoPi * best->gap), Q};
}

double choose_Q(double N, double conductor) {
  if (!(N > 0.0) || !(conductor > 0.0)) throw std::invalid_argument("choose_Q needs positive inputs");
  return std::max(1.0, std::sqrt(N) * std::pow(conductor, -1.0 / 6.0));
}

}  // namespace gl3twist
