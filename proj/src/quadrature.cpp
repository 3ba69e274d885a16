#include "malmsten/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "malmsten/errors.hpp"

namespace malmsten {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxTables = 12;

// --- tanh-sinh on (0,1) ----------------------------------------------------
// t -> x = 1/(1+e^{-2g}), g = (pi/2) sinh t.  dx/dt = pi cosh(t) x(1-x).
// Nodes come in symmetric pairs (x, 1-x); the small coordinate
// xa = 1/(1+e^{2g}) is computed directly from the transform, so the distance
// of the upper node to 1 is known without cancellation.

struct TsNode {
  double xa;  // lower abscissa, in (0, 1/2)
  double xb;  // upper abscissa, 1 - xa
  double w;   // pi cosh(t) xa xb
};

struct TsTables {
  double center_w = kPi / 4;                   // t = 0: x = 1/2
  std::vector<std::vector<TsNode>> levels;     // levels[0]: t = 1,2,...
};                                             // levels[l]: odd multiples of 2^-l

TsNode make_ts_node(double t, bool& alive) {
  double g = (kPi / 2) * std::sinh(t);
  double e2g = std::exp(2.0 * g);
  TsNode n;
  n.xa = 1.0 / (1.0 + e2g);
  n.xb = 1.0 / (1.0 + std::exp(-2.0 * g));
  n.w = kPi * std::cosh(t) * n.xa * n.xb;
  // Cut where the abscissa saturates or the weight underflows: the integrand
  // is never evaluated at the endpoints themselves.
  alive = std::isfinite(e2g) && n.xa > 0.0 && n.w > 0.0;
  return n;
}

const TsTables& ts_tables() {
  static const TsTables tables = [] {
    TsTables t;
    t.levels.resize(kMaxTables + 1);
    for (int k = 1;; ++k) {  // level 0: integer t
      bool alive = false;
      TsNode n = make_ts_node(double(k), alive);
      if (!alive) break;
      t.levels[0].push_back(n);
    }
    for (int l = 1; l <= kMaxTables; ++l) {
      double h = std::ldexp(1.0, -l);
      for (int j = 0;; ++j) {  // new nodes: odd multiples of h
        bool alive = false;
        TsNode n = make_ts_node(h * (2 * j + 1), alive);
        if (!alive) break;
        t.levels[l].push_back(n);
      }
    }
    return t;
  }();
  return tables;
}

// --- exp-sinh on (0, inf) ---------------------------------------------------
// t -> x = e^{g}, g = (pi/2) sinh t.  dx/dt = x (pi/2) cosh t.

struct EsNode {
  double x;
  double w;
};

struct EsTables {
  double center_x = 1.0;
  double center_w = kPi / 2;
  std::vector<std::vector<EsNode>> levels;
};

bool make_es_node(double t, EsNode& n) {
  double g = (kPi / 2) * std::sinh(t);
  n.x = std::exp(g);
  n.w = n.x * (kPi / 2) * std::cosh(t);
  return n.x > 0.0 && std::isfinite(n.x) && n.w > 0.0 && std::isfinite(n.w);
}

const EsTables& es_tables() {
  static const EsTables tables = [] {
    EsTables t;
    t.levels.resize(kMaxTables + 1);
    auto push_sides = [&](int level, double tt) {
      EsNode n;
      bool any = false;
      if (make_es_node(tt, n)) t.levels[level].push_back(n), any = true;
      if (make_es_node(-tt, n)) t.levels[level].push_back(n), any = true;
      return any;
    };
    for (int k = 1; push_sides(0, double(k)); ++k) {}
    for (int l = 1; l <= kMaxTables; ++l) {
      double h = std::ldexp(1.0, -l);
      for (int j = 0; push_sides(l, h * (2 * j + 1)); ++j) {}
    }
    return t;
  }();
  return tables;
}

// --- shared driver -----------------------------------------------------------

struct KahanC {
  Cplx s{0.0, 0.0};
  Cplx c{0.0, 0.0};
  void add(Cplx v) {
    Cplx y = v - c;
    Cplx t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

void validate(const QuadratureSettings& cfg) {
  if (!(cfg.target_eps > 0.0))
    throw DomainError("quadrature: target_eps must be positive");
  if (cfg.max_level < 1 || cfg.max_level > kMaxTables)
    throw DomainError("quadrature: max_level must lie in [1, 12]");
}

void check_finite(Cplx v, double x) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NonFiniteError("quadrature: integrand returned a non-finite value at x = " +
                             std::to_string(x),
                         x);
}

template <class EvalLevel>
QuadTrace de_integrate(const QuadratureSettings& cfg, EvalLevel eval_level) {
  validate(cfg);
  QuadTrace trace;
  KahanC acc;
  long work = 0;

  eval_level(0, acc, work);
  Cplx prev = acc.s;  // h_0 = 1
  double diff = 0.0;
  for (int l = 1; l <= cfg.max_level; ++l) {
    eval_level(l, acc, work);
    Cplx cur = std::ldexp(1.0, -l) * acc.s;
    diff = std::abs(cur - prev);
    trace.level_diffs.push_back(diff);
    prev = cur;
    if (diff <= cfg.target_eps) {
      trace.result = {cur, std::max(diff, 5e-16 * std::abs(cur)),
                      Method::quadrature, work};
      return trace;
    }
  }
  throw ConvergenceError(
      "quadrature: inter-level difference " + std::to_string(diff) +
          " above target_eps after level " + std::to_string(cfg.max_level),
      diff, work);
}

}  // namespace

QuadTrace integrate_01_trace(const Integrand01& f, const QuadratureSettings& cfg) {
  const TsTables& tb = ts_tables();
  return de_integrate(cfg, [&](int level, KahanC& acc, long& work) {
    if (level == 0) {
      Cplx fc = f(0.5, 0.5);
      check_finite(fc, 0.5);
      acc.add(fc * tb.center_w);
      ++work;
    }
    for (const TsNode& n : tb.levels[level]) {
      Cplx fa = f(n.xa, n.xa);
      check_finite(fa, n.xa);
      Cplx fb = f(n.xb, -n.xa);
      check_finite(fb, n.xb);
      acc.add((fa + fb) * n.w);
      work += 2;
    }
  });
}

QuadTrace integrate_0inf_trace(const Integrand0Inf& f, const QuadratureSettings& cfg) {
  const EsTables& tb = es_tables();
  return de_integrate(cfg, [&](int level, KahanC& acc, long& work) {
    if (level == 0) {
      Cplx fc = f(tb.center_x);
      check_finite(fc, tb.center_x);
      acc.add(fc * tb.center_w);
      ++work;
    }
    for (const EsNode& n : tb.levels[level]) {
      Cplx fv = f(n.x);
      check_finite(fv, n.x);
      acc.add(fv * n.w);
      ++work;
    }
  });
}

EvalResult integrate_01(const Integrand01& f, const QuadratureSettings& cfg) {
  return integrate_01_trace(f, cfg).result;
}

EvalResult integrate_0inf(const Integrand0Inf& f, const QuadratureSettings& cfg) {
  return integrate_0inf_trace(f, cfg).result;
}

}  // namespace malmsten
