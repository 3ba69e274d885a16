#include "malmsten/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "malmsten/errors.hpp"
#include "malmsten/gamma.hpp"

namespace malmsten {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

// n^{-s} with an exact real fast path (keeps conjugate symmetry bit-exact).
Cplx pow_int_ms(long n, Cplx s) {
  double ln = std::log(double(n));
  if (s.imag() == 0.0) return {std::exp(-s.real() * ln), 0.0};
  return std::exp(-s * ln);
}

// --- Cohen / Rodriguez Villegas / Zagier acceleration ------------------------
// Sum of an alternating series sum_{k>=0} (-1)^k a(k) using Chebyshev-shaped
// weights. For coefficients that are moments of a measure on [0,1] (both eta
// and beta qualify) the error after n terms decays like (3+sqrt(8))^{-n};
// well off that assumption (Re s << 0.5, large |Im s|) extra terms are
// needed, which the caller accounts for in cvz_terms_for.
template <class TermFn>
Cplx cvz_sum(int n, TermFn a) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  Cplx s{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b *= (k + n) * double(k - n) / ((k + 0.5) * (k + 1));
  }
  return s / d;
}

int cvz_terms_for(Cplx s, double target_eps) {
  double digits = -std::log10(std::clamp(target_eps, 1e-300, 0.1));
  double n = 1.31 * (digits + 2.0) + 0.9 * std::abs(s.imag());
  // Left of the line the terms grow, which both slows the decay of the
  // Chebyshev remainder and amplifies roundoff; past n ~ 45 the roundoff
  // regrowth dominates for Re s <= -2, so the padding aims just below that.
  if (s.real() < 0.5) n += 6.0 * (0.5 - s.real());
  n = std::ceil(n);
  return int(std::clamp(n, 16.0, 350.0));
}

// Evaluate an alternating series sum_{k>=0} (-1)^k a(k) under cfg: CVZ with an
// n / n+8 difference as the error estimate, or the plain partial sum when
// acceleration is disabled.
template <class TermFn>
EvalResult alternating_sum(Cplx s, const SeriesSettings& cfg, TermFn a,
                           const char* who) {
  if (cfg.acceleration == SeriesSettings::Acceleration::none) {
    // Plain partial sums converge only for Re s > 0 and are slow; this path
    // exists as an independent cross-check, not as a production evaluator.
    Cplx sum{0.0, 0.0};
    Cplx comp{0.0, 0.0};  // Kahan compensation
    double sign = 1.0;
    for (long k = 0; k < cfg.max_terms; ++k) {
      Cplx term = sign * a(k);
      Cplx y = term - comp;
      Cplx t = sum + y;
      comp = (t - sum) - y;
      sum = t;
      sign = -sign;
      // Alternating-series remainder bound: next term's magnitude.
      double next = std::abs(a(k + 1));
      if (next <= cfg.target_eps)
        return {sum, next, Method::direct_series, k + 1};
    }
    throw ConvergenceError(std::string(who) +
                               ": direct alternating series did not reach "
                               "target_eps within max_terms",
                           std::abs(a(cfg.max_terms)), cfg.max_terms);
  }

  int n = cvz_terms_for(s, cfg.target_eps);
  int n_hi = std::min(n + 8, 360);
  if (long(n_hi) > cfg.max_terms)
    throw ConvergenceError(
        std::string(who) + ": max_terms is below what the acceleration "
                           "needs for target_eps at this s",
        std::numeric_limits<double>::infinity(), cfg.max_terms);
  Cplx lo = cvz_sum(n, a);
  Cplx hi = cvz_sum(n_hi, a);
  double est = std::abs(hi - lo) + 4e-16 * std::abs(hi);
  // The n / n+8 difference is a conservative bound for the better of the two
  // sums. Reject only results that are unusable outright (divergence,
  // overflow of the weighted terms, or an estimate orders of magnitude above
  // target); merely missing target_eps while staying accurate in relative
  // terms is reported honestly through err_estimate instead.
  if (!std::isfinite(est) ||
      est > std::max(1e3 * cfg.target_eps, 1e-9 * std::abs(hi)))
    throw ConvergenceError(std::string(who) +
                               ": acceleration stalled (estimate " +
                               std::to_string(est) + ")",
                           est, n + n_hi);
  return {hi, est, Method::accelerated_series, n + n_hi};
}

EvalResult eta_series_impl(Cplx s, const SeriesSettings& cfg) {
  return alternating_sum(s, cfg, [s](long k) { return pow_int_ms(k + 1, s); },
                         "eta");
}

EvalResult beta_series_impl(Cplx s, const SeriesSettings& cfg) {
  return alternating_sum(s, cfg, [s](long k) { return pow_int_ms(2 * k + 1, s); },
                         "beta");
}

}  // namespace

EvalResult eta_series(Cplx s, const SeriesSettings& cfg) {
  return eta_series_impl(s, cfg);
}

EvalResult beta_series(Cplx s, const SeriesSettings& cfg) {
  return beta_series_impl(s, cfg);
}

Cplx eta_fe_prefactor(Cplx s) {
  // ((2^s - 1) / (1 - 2^{s-1})) * pi^{-s} * cos(pi s / 2) * Gamma(s),
  // with both powers of two written through expm1 so the factor stays fully
  // accurate near its zeros and near s = 1.
  Cplx num = expm1_c(s * kLn2);           // 2^s - 1
  Cplx den = -expm1_c((s - 1.0) * kLn2);  // 1 - 2^{s-1}
  if (den == 0.0) {
    // s = 1 exactly, where cos(pi s/2) also vanishes:
    // cos(pi s/2) / (1 - 2^{s-1}) -> pi / (2 ln 2), num = 1, Gamma(1) = 1.
    return num * (1.0 / (2.0 * kLn2));
  }
  Cplx trig = cos_half_pi(s);
  if (trig == 0.0 && s.imag() == 0.0) return {0.0, 0.0};  // odd integer s != 1
  Cplx rest = std::exp(-s * Cplx(std::log(kPi), 0.0)) * gamma(s);
  return num / den * trig * rest;
}

Cplx beta_fe_prefactor(Cplx s) {
  Cplx trig = sin_half_pi(s);
  if (trig == 0.0 && s.imag() == 0.0) return {0.0, 0.0};  // even integer s
  return std::exp(s * Cplx(std::log(2.0 / kPi), 0.0)) * trig * gamma(s);
}

EvalResult eta(Cplx s, const SeriesSettings& cfg) {
  if (s.real() >= 0.5) return eta_series_impl(s, cfg);
  // eta(s) = prefactor(1-s) * eta(1-s); the reflected argument has
  // Re(1-s) > 0.5 where the accelerated series is at its best.
  Cplx sp = 1.0 - s;
  // Near (but not at) s = -2 pi i k / ln 2 the prefactor's 1 - 2^{sp-1}
  // denominator is tiny and eta(sp) is correspondingly tiny: the quotient
  // form loses relative accuracy there. eta is entire and the acceleration
  // still converges on Re s = 0, so sum at s directly instead.
  Cplx den = -expm1_c(-s * kLn2);  // 1 - 2^{sp-1}
  if (std::abs(den) < 1e-6 && den != 0.0) return eta_series_impl(s, cfg);
  Cplx pref = eta_fe_prefactor(sp);
  if (pref == 0.0) {
    // Trivial zero (s a negative even integer): exact.
    return {{0.0, 0.0}, 0.0, Method::functional_equation, 0};
  }
  EvalResult inner = eta_series_impl(sp, cfg);
  Cplx v = pref * inner.value;
  double est = std::abs(pref) * inner.err_estimate + 4e-16 * std::abs(v);
  return {v, est, Method::functional_equation, inner.work};
}

EvalResult beta(Cplx s, const SeriesSettings& cfg) {
  if (s.real() >= 0.5) return beta_series_impl(s, cfg);
  Cplx sp = 1.0 - s;
  Cplx pref = beta_fe_prefactor(sp);
  if (pref == 0.0) {
    return {{0.0, 0.0}, 0.0, Method::functional_equation, 0};
  }
  EvalResult inner = beta_series_impl(sp, cfg);
  Cplx v = pref * inner.value;
  double est = std::abs(pref) * inner.err_estimate + 4e-16 * std::abs(v);
  return {v, est, Method::functional_equation, inner.work};
}

EvalResult zeta(Cplx s, const SeriesSettings& cfg) {
  if (s == Cplx(1.0, 0.0))
    throw PoleError("zeta: pole at s = 1",
                    {Cplx(1.0, 0.0), PoleInfo::Kind::zeta_pole});
  Cplx den = -expm1_c((1.0 - s) * kLn2);  // 1 - 2^{1-s}
  if (std::abs(den) < 1e-8) {
    if (std::abs(s - 1.0) < 0.5) {
      // Genuinely near the pole: den = (s-1) ln 2 + O((s-1)^2) is computed
      // by expm1 with full relative accuracy, so fall through and divide.
    } else {
      // Removable zero of 1 - 2^{1-s} off the pole: eta also vanishes there,
      // but not in a way this quotient can exploit at double precision.
      double k = std::round(s.imag() * kLn2 / (2.0 * kPi));
      Cplx loc{1.0, 2.0 * kPi * k / kLn2};
      throw NearPoleError(
          "zeta: s is within the safe-division threshold of the removable "
          "point 1 + 2*pi*i*k/ln2 with k != 0",
          loc);
    }
  }
  EvalResult e = eta(s, cfg);
  Cplx v = e.value / den;
  double est = e.err_estimate / std::abs(den) + 4e-16 * std::abs(v);
  return {v, est, e.method, e.work};
}

EvalResult lambda_from_eta(Cplx s, const SeriesSettings& cfg) {
  // lambda(s) = (2^s - 1) / (2^s - 2) * eta(s). The pole set of the quotient
  // is 2^s = 2, i.e. s = 1 + 2 pi i k / ln 2.
  Cplx num = expm1_c(s * kLn2);                   // 2^s - 1
  Cplx den = 2.0 * expm1_c((s - 1.0) * kLn2);     // 2^s - 2
  if (std::abs(den) < 1e-10) {
    double k = std::round(s.imag() * kLn2 / (2.0 * kPi));
    Cplx loc{1.0, 2.0 * kPi * k / kLn2};
    throw PoleError("lambda: pole at s = 1 + 2*pi*i*k/ln2",
                    {loc, PoleInfo::Kind::zeta_pole});
  }
  if (num == 0.0) {
    // s = 0: the ratio vanishes exactly; no need to evaluate eta.
    return {{0.0, 0.0}, 0.0, Method::closed_relation, 0};
  }
  EvalResult e = eta(s, cfg);
  Cplx ratio = num / den;
  Cplx v = ratio * e.value;
  double est = std::abs(ratio) * e.err_estimate + 4e-16 * std::abs(v);
  return {v, est, Method::closed_relation, e.work};
}

EvalResult lambda(Cplx s, const SeriesSettings& cfg) {
  if (s.real() <= 1.0) return lambda_from_eta(s, cfg);

  // Direct sum over odd denominators, with an Euler-Maclaurin tail at
  // w = 2N+1:  sum_{n>=N} (2n+1)^{-s}
  //    = w^{1-s}/(2(s-1)) + w^{-s}/2 + s w^{-s-1}/6
  //      - s(s+1)(s+2) w^{-s-3}/90 + s..(s+4) w^{-s-5}/945 + ...
  // (step-2 Euler-Maclaurin; the next omitted term is ~ (s..)(w^{-s-7})).
  long n_sum = std::min<long>(400, std::max<long>(cfg.max_terms, 8));
  Cplx sum{0.0, 0.0};
  Cplx comp{0.0, 0.0};
  for (long n = 0; n < n_sum; ++n) {
    Cplx term = pow_int_ms(2 * n + 1, s);
    Cplx y = term - comp;
    Cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  double w = double(2 * n_sum + 1);
  Cplx wms = pow_int_ms(2 * n_sum + 1, s);  // w^{-s}
  Cplx tail = w * wms / (2.0 * (s - 1.0)) + wms / 2.0 + s * wms / (w * 6.0) -
              s * (s + 1.0) * (s + 2.0) * wms / (w * w * w * 90.0) +
              s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * wms /
                  (w * w * w * w * w * 945.0);
  Cplx v = sum + tail;
  // First omitted correction ~ |s|^7 |w^{-s}| / (w^7 * 9450), padded.
  double s7 = std::pow(std::abs(s) + 6.0, 7);
  double est = 1.06e-4 * s7 * std::abs(wms) / std::pow(w, 7) +
               6e-16 * std::abs(v);
  if (est > std::max(cfg.target_eps * 10.0, 1e-11 * std::abs(v)))
    return lambda_from_eta(s, cfg);  // |Im s| large: acceleration wins
  return {v, est, Method::direct_series, n_sum};
}

}  // namespace malmsten
