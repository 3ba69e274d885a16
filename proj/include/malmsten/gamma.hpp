#pragma once

#include "malmsten/types.hpp"

namespace malmsten {

// sin(pi*x) / cos(pi*x) with the argument reduced exactly (fmod by 2, then
// round to the nearest integer) before any multiplication by pi, so the
// result is exactly 0 at integer / half-integer lattice points and exactly
// +-1 halfway between them.
double sin_pi(double x);
double cos_pi(double x);

// cos(pi*s/2) and sin(pi*s/2) for complex s, built on the exact-reduction
// real kernels: exactly 0 at odd (resp. even) real integers, and the real
// part vanishes exactly on the corresponding vertical lines.
Cplx cos_half_pi(Cplx s);
Cplx sin_half_pi(Cplx s);

// exp(z) - 1 without cancellation near z = 0 (complex expm1).
Cplx expm1_c(Cplx z);

// Principal log-Gamma: the analytic continuation that is real on the positive
// real axis. Lanczos (g = 607/128, 15 terms) on Re z >= 0.5; reflection with
// a cancellation-safe, branch-tracked log-sin for Re z < 0.5.
// Throws PoleError at non-positive integers.
Cplx log_gamma(Cplx z);

// exp(log_gamma(z)); real arguments take a real-arithmetic path so the
// imaginary part is exactly zero. Throws PoleError at non-positive integers
// and OverflowError when Re(log_gamma) exceeds ln(DBL_MAX).
Cplx gamma(Cplx z);

}  // namespace malmsten
