#include "malmsten/gamma.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>

#include "malmsten/errors.hpp"

namespace malmsten {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.1447298858494001741;      // ln(pi)
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // ln(sqrt(2 pi))
constexpr double kMaxExp = 709.782712893384;            // ln(DBL_MAX)

// Lanczos, g = 607/128 = 4.7421875, 15 terms (Godfrey's coefficient set).
// Relative accuracy of exp(log_gamma) is ~1e-14 on Re z >= 0.5, |z| <= 50.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

double lanczos_sum(double x) {
  double s = kLanczos[0];
  for (int k = 1; k < 15; ++k) s += kLanczos[k] / (x + (k - 1));
  return s;
}

Cplx lanczos_sum(Cplx z) {
  Cplx s = kLanczos[0];
  for (int k = 1; k < 15; ++k) s += kLanczos[k] / (z + double(k - 1));
  return s;
}

// log Gamma on x >= 0.5, real.
double log_gamma_pos(double x) {
  double t = x + (kLanczosG - 0.5);
  return kLogSqrt2Pi + (x - 0.5) * std::log(t) - t + std::log(lanczos_sum(x));
}

// log Gamma on Re z >= 0.5. t stays in the right half-plane, so the principal
// logs give the continuous (principal) branch directly.
Cplx log_gamma_pos(Cplx z) {
  Cplx t = z + (kLanczosG - 0.5);
  return kLogSqrt2Pi + (z - 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

// log(sin(pi z)) for Im z != 0, branch-consistent with principal log-Gamma:
// for Im z > 0,  sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})  with
// |e^{2 i pi z}| < 1, so the last log is principal and cancellation-free.
// Only the phase of e^{2 i pi z} is argument-reduced; the -i pi z term is not
// periodic and keeps the full z.
Cplx log_sin_pi(Cplx z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  double xr = z.real() - std::nearbyint(z.real());
  Cplx q = std::exp(-2.0 * kPi * z.imag()) *
           Cplx(std::cos(2.0 * kPi * xr), std::sin(2.0 * kPi * xr));
  return Cplx(-std::numbers::ln2, kPi / 2) +
         Cplx(kPi * z.imag(), -kPi * z.real()) + std::log(1.0 - q);
}

bool is_nonpositive_integer(Cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

[[noreturn]] void throw_pole(Cplx z) {
  throw PoleError("gamma: pole at non-positive integer " +
                      std::to_string((long long)z.real()),
                  PoleInfo{z, PoleInfo::Kind::gamma_pole});
}

}  // namespace

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(x, 2.0);      // exact
  double n = std::nearbyint(r);      // in {-2,-1,0,1,2}
  double d = r - n;                  // exact, |d| <= 1/2
  double v;
  if (d == 0.5)
    v = 1.0;
  else if (d == -0.5)
    v = -1.0;
  else
    v = std::sin(kPi * d);           // d == 0 gives exactly +-0
  return std::fmod(n, 2.0) != 0.0 ? -v : v;
}

double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(x, 2.0);
  double n = std::nearbyint(r);
  double d = r - n;
  if (d == 0.5 || d == -0.5) return 0.0;  // exact zero at half-integers
  double v = std::cos(kPi * d);
  return std::fmod(n, 2.0) != 0.0 ? -v : v;
}

Cplx cos_half_pi(Cplx s) {
  double h = s.real() / 2.0;  // exact
  double c = cos_pi(h), sn = sin_pi(h);
  double y = s.imag();
  if (y == 0.0) return Cplx(c, 0.0);
  return Cplx(c * std::cosh(kPi * y / 2), -sn * std::sinh(kPi * y / 2));
}

Cplx sin_half_pi(Cplx s) {
  double h = s.real() / 2.0;
  double c = cos_pi(h), sn = sin_pi(h);
  double y = s.imag();
  if (y == 0.0) return Cplx(sn, 0.0);
  return Cplx(sn * std::cosh(kPi * y / 2), c * std::sinh(kPi * y / 2));
}

Cplx expm1_c(Cplx z) {
  if (z.imag() == 0.0) return Cplx(std::expm1(z.real()), 0.0);
  // e^z - 1 = expm1(x) cos y - 2 sin^2(y/2) + i e^x sin y
  double ex = std::expm1(z.real());
  double hs = std::sin(z.imag() / 2);
  return Cplx(ex * std::cos(z.imag()) - 2.0 * hs * hs,
              (ex + 1.0) * std::sin(z.imag()));
}

Cplx log_gamma(Cplx z) {
  if (is_nonpositive_integer(z)) throw_pole(z);
  if (z.imag() == 0.0) {
    double x = z.real();
    if (x >= 0.5) return Cplx(log_gamma_pos(x), 0.0);
    // Reflection. Principal value: Im = -pi on the intervals where
    // Gamma(x) < 0 (matches the continuation approached from below).
    double sp = sin_pi(x);
    return Cplx(kLogPi - std::log(std::abs(sp)) - log_gamma_pos(1.0 - x),
                sp < 0.0 ? -kPi : 0.0);
  }
  if (z.real() >= 0.5) return log_gamma_pos(z);
  return Cplx(kLogPi, 0.0) - log_sin_pi(z) - log_gamma_pos(1.0 - z);
}

Cplx gamma(Cplx z) {
  if (is_nonpositive_integer(z)) throw_pole(z);
  if (z.imag() == 0.0) {
    double x = z.real();
    if (x >= 0.5) {
      double lg = log_gamma_pos(x);
      if (lg > kMaxExp) throw OverflowError("gamma: overflow at z = " + std::to_string(x));
      return Cplx(std::exp(lg), 0.0);
    }
    // Gamma(x) = pi / (sin(pi x) Gamma(1-x)), kept in real arithmetic so the
    // result is exactly real with the correct sign.
    double sp = sin_pi(x);
    double lmag = kLogPi - std::log(std::abs(sp)) - log_gamma_pos(1.0 - x);
    if (lmag > kMaxExp) throw OverflowError("gamma: overflow near pole at z = " + std::to_string(x));
    double mag = std::exp(lmag);
    return Cplx(sp < 0.0 ? -mag : mag, 0.0);
  }
  Cplx lg = log_gamma(z);
  if (lg.real() > kMaxExp) throw OverflowError("gamma: overflow");
  return std::exp(lg);
}

}  // namespace malmsten
