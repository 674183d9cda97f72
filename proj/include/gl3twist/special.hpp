#pragma once

#include <complex>

namespace gl3twist {

using cplx = std::complex<double>;

/// log Gamma(z) for complex z. The imaginary part is only defined modulo
/// 2*pi; callers exponentiate. Returns +inf real part at the poles.
cplx log_gamma(cplx z);

/// log(sin(pi z)) evaluated without overflow for large |Im z|.
cplx log_sin_pi(cplx z);

/// log of the reciprocal gamma function. 1/Gamma is entire, so at the
/// non-positive integers `zero` is set and `value` is meaningless.
struct LogReciprocalGamma {
  cplx value;
  bool zero = false;
};
LogReciprocalGamma log_rgamma(cplx z);

/// 1/Gamma(z), exactly zero at the non-positive integers.
cplx rgamma(cplx z);

/// Riemann zeta via Euler-Maclaurin summation; intended for |Im s| <= a few
/// hundred and s away from 1.
cplx riemann_zeta(cplx s);

/// K_{ir}(x) for real r and x > 0, from the integral
/// K_{ir}(x) = int_0^inf exp(-x cosh t) cos(r t) dt (trapezoid rule; the
/// integrand is entire so the rule converges geometrically).
double kbessel_ir(double r, double x);

}  // namespace gl3twist
