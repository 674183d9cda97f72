#pragma once

#include <complex>
#include <cstdint>

namespace gl3twist {

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// x in [0, q) with a x = 1 mod q. Throws NotInvertible when gcd(a, q) > 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t q);

/// The complete sum over units x mod c of e((a x + b xbar)/c), before the
/// imaginary part is dropped.
std::complex<double> kloosterman_sum(std::int64_t a, std::int64_t b, std::int64_t c);

/// S(a, b; c). Real for every a, b, c; the O(c) direct sum.
double kloosterman(std::int64_t a, std::int64_t b, std::int64_t c);

}  // namespace gl3twist
