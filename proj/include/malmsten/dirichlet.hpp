#pragma once

#include "malmsten/types.hpp"

namespace malmsten {

// Dirichlet eta (alternating zeta), entire in s.
//   Re s >= 0.5 : accelerated alternating series sum (-1)^{n+1} n^{-s}
//   Re s <  0.5 : functional equation
//     eta(1-s') = ((2^{s'}-1)/(1-2^{s'-1})) pi^{-s'} cos(pi s'/2) Gamma(s') eta(s')
//   with s' = 1-s, so Gamma is only ever evaluated on Re >= 0.5. Trivial
//   zeros at negative even integers are exact (the trig prefactor is exact 0).
EvalResult eta(Cplx s, const SeriesSettings& cfg = {});

// Dirichlet lambda, sum over odd denominators 1/(2n+1)^s. Direct series (with
// an Euler-Maclaurin tail) for Re s > 1, otherwise delegates to
// lambda_from_eta. PoleError at s = 1.
EvalResult lambda(Cplx s, const SeriesSettings& cfg = {});

// lambda via the closed relation lambda(s) = (2^s-1)/(2^s-2) * eta(s).
// PoleError when |2^s - 2| is below the safe-division threshold.
EvalResult lambda_from_eta(Cplx s, const SeriesSettings& cfg = {});

// Dirichlet beta, sum (-1)^n (2n+1)^{-s}, entire. Accelerated series for
// Re s >= 0.5, otherwise the functional equation
//   beta(1-s') = (2/pi)^{s'} sin(pi s'/2) Gamma(s') beta(s'), s' = 1-s.
EvalResult beta(Cplx s, const SeriesSettings& cfg = {});

// Riemann zeta via eta: zeta(s) = eta(s) / (1 - 2^{1-s}). PoleError at s = 1;
// NearPoleError at the removable points s = 1 + 2 pi i k / ln 2, k != 0.
EvalResult zeta(Cplx s, const SeriesSettings& cfg = {});

// Series-path-only evaluators (no functional-equation switchover). The
// acceleration keeps converging well left of Re s = 0.5 for moderate |s|;
// the FE-residual property tests use these to compute both sides of the
// functional equations independently of the continuation code path.
EvalResult eta_series(Cplx s, const SeriesSettings& cfg = {});
EvalResult beta_series(Cplx s, const SeriesSettings& cfg = {});

// The functional-equation prefactors themselves; both equal 1 at s = 1/2.
// eta_fe_prefactor handles the removable point s = 1 exactly
// (cos(pi s/2)/(1-2^{s-1}) -> pi/(2 ln 2)).
Cplx eta_fe_prefactor(Cplx s);   // ((2^s-1)/(1-2^{s-1})) pi^{-s} cos(pi s/2) Gamma(s)
Cplx beta_fe_prefactor(Cplx s);  // (2/pi)^s sin(pi s/2) Gamma(s)

}  // namespace malmsten
