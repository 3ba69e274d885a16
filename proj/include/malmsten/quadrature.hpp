#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "malmsten/types.hpp"

namespace malmsten {

// Integrand on (0,1). Called as f(x, xc) where xc is the signed distance to
// the nearest endpoint, computed from the transform without cancellation:
//   xc > 0  =>  x is near 0 and xc == x
//   xc < 0  =>  x is near 1 and x == 1 + xc  (so 1 - x == -xc exactly)
// ln(1/x) near x = 1 should therefore be evaluated as -log1p(xc).
// Never called at the endpoints themselves.
using Integrand01 = std::function<Cplx(double x, double xc)>;

// Integrand on (0, inf); never called at 0.
using Integrand0Inf = std::function<Cplx(double u)>;

// Cancellation-free ln(1/y) for (y, yc) pairs handed to an Integrand01.
inline double log_recip(double y, double yc) {
  return yc < 0.0 ? -std::log1p(yc) : -std::log(y);
}

// Double-exponential (tanh-sinh) quadrature over (0,1). Robust to log,
// log-log and integrable algebraic endpoint singularities. err_estimate is
// the magnitude of the last inter-level difference (floored at rounding
// level). Throws ConvergenceError if max_level is reached with the
// inter-level difference still above target_eps, NonFiniteError if the
// integrand returns a non-finite value at an interior node.
EvalResult integrate_01(const Integrand01& f, const QuadratureSettings& cfg = {});

// Double-exponential (exp-sinh) quadrature over (0, inf), for integrands with
// |f(u)| <= C*u^{-sigma}, sigma < 1 near 0 and exponential decay at infinity.
EvalResult integrate_0inf(const Integrand0Inf& f, const QuadratureSettings& cfg = {});

// Same, but also reporting every inter-level difference (used by the
// level-monotonicity property tests).
struct QuadTrace {
  EvalResult result;
  std::vector<double> level_diffs;  // level_diffs[k] = |T_{k+1} - T_k|
};

QuadTrace integrate_01_trace(const Integrand01& f, const QuadratureSettings& cfg = {});
QuadTrace integrate_0inf_trace(const Integrand0Inf& f, const QuadratureSettings& cfg = {});

}  // namespace malmsten
