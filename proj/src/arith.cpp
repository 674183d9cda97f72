#include "gl3twist/arith.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "gl3twist/error.hpp"
#include "gl3twist/numeric.hpp"

namespace gl3twist {
namespace {

std::int64_t reduce(std::int64_t a, std::int64_t c) {
  const std::int64_t r = a % c;
  return r < 0 ? r + c : r;
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("modulus must be positive");
  std::int64_t r0 = reduce(a, q), r1 = q;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t t = r0 - quot * r1;
    r0 = r1;
    r1 = t;
    t = s0 - quot * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) {
    throw NotInvertible(std::to_string(a) + " is not invertible modulo " + std::to_string(q));
  }
  return reduce(s0, q);
}

std::complex<double> kloosterman_sum(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (c < 1) throw std::invalid_argument("Kloosterman modulus must be positive");
  a = reduce(a, c);
  b = reduce(b, c);
  std::vector<double> cosines(c), sines(c);
  for (std::int64_t k = 0; k < c; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(c);
    cosines[k] = std::cos(angle);
    sines[k] = std::sin(angle);
  }
  CompensatedSum re, im;
  for (std::int64_t x = 0; x < c; ++x) {
    if (gcd(x, c) != 1) continue;
    const std::int64_t xbar = mod_inverse(x, c);
    const std::int64_t k = (a * x + b * xbar) % c;
    re.add(cosines[k]);
    im.add(sines[k]);
  }
  return {re.value(), im.value()};
}

double kloosterman(std::int64_t a, std::int64_t b, std::int64_t c) {
  return kloosterman_sum(a, b, c).real();
}

}  // namespace gl3twist
