#pragma once

#include <cstdint>

namespace gl3twist {

/// alpha = a/q + theta/(2 pi) with gcd(a, q) = 1, q <= Q, |theta| <= 2 pi/(q Q).
struct RationalApproximation {
  std::int64_t a = 0;
  std::int64_t q = 1;
  double theta = 0.0;
  double Q = 1.0;

  double bound() const;  ///< 2 pi / (q Q)
};

/// Among all fractions satisfying the invariants, the one with the smallest
/// |theta| (ties: smaller q). Candidates are the continued-fraction
/// convergents and intermediate fractions with denominator <= Q.
RationalApproximation dirichlet_approx(double alpha, double Q);

/// max(1, N^{1/2} conductor^{-1/6}).
double choose_Q(double N, double conductor);

}  // namespace gl3twist
