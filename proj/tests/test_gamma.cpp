#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "frozen.hpp"
#include "malmsten/errors.hpp"
#include "malmsten/gamma.hpp"
#include "malmsten/quadrature.hpp"

using namespace malmsten;

namespace {

constexpr double kPi = std::numbers::pi;

double dist(Cplx a, Cplx b) { return std::abs(a - b); }

}  // namespace

TEST_CASE("log_gamma: pinned values") {
  CHECK(std::abs(log_gamma({1.0, 0.0})) <= 1e-15);
  CHECK(dist(log_gamma({5.0, 0.0}), {std::log(24.0), 0.0}) <= 1e-13);
  CHECK(dist(log_gamma({25.0, 3.0}), frozen::kLogGamma25p3i) <= 1e-12 * std::abs(frozen::kLogGamma25p3i));
  CHECK(dist(log_gamma({2.5, 3.0}), frozen::kLogGammaMid) <= 1e-12 * std::abs(frozen::kLogGammaMid));
  // Real on the positive real axis, exactly.
  CHECK(log_gamma({8.2, 0.0}).imag() == 0.0);
  CHECK(log_gamma({0.03, 0.0}).imag() == 0.0);  // reflection path, still real
}

TEST_CASE("gamma: pinned values") {
  CHECK(dist(gamma({4.0, 0.0}), {6.0, 0.0}) <= 6.0 * 1e-14);
  CHECK(dist(gamma({0.5, 0.0}), {std::sqrt(kPi), 0.0}) <= 1e-12);
  CHECK(dist(gamma({1.5, 0.0}), {frozen::kGamma15, 0.0}) <= 1e-13);
  CHECK(dist(gamma({10.5, 0.0}), {frozen::kGamma105, 0.0}) <= 1e-12 * frozen::kGamma105);
  CHECK(dist(gamma({-2.5, 0.0}), {frozen::kGammaM25, 0.0}) <= 1e-12);
  CHECK(dist(gamma({0.5, 5.0}), frozen::kGammaHalf5i) <= 1e-12 * std::abs(frozen::kGammaHalf5i));
  CHECK(dist(gamma({-0.5, 1.5}), frozen::kGammaM05p15i) <= 1e-12 * std::abs(frozen::kGammaM05p15i));
  CHECK(dist(gamma({0.5, -0.7}), frozen::kGammaHalfM07i) <= 1e-12 * std::abs(frozen::kGammaHalfM07i));
  // Real arguments produce exactly real results.
  CHECK(gamma({3.7, 0.0}).imag() == 0.0);
  CHECK(gamma({-1.3, 0.0}).imag() == 0.0);
}

TEST_CASE("gamma: defining-integral oracle at z = 1/2") {
  // Gamma(1/2) = int_0^inf e^{-t} t^{-1/2} dt, evaluated by the independent
  // quadrature engine; exp(log_gamma) must land within 1e-11 of it.
  auto f = [](double t) -> Cplx { return std::exp(-t) / std::sqrt(t); };
  EvalResult q = integrate_0inf(f, {});
  CHECK(dist(std::exp(log_gamma({0.5, 0.0})), q.value) <= 1e-11);
  CHECK(dist(gamma({0.5, 0.0}), q.value) <= 1e-11);
}

TEST_CASE("gamma: recurrence oracle reaches Re z < 0") {
  // Gamma(-1/2) = Gamma(1/2)/(-1/2): the reflection-based value must agree
  // with the recurrence continuation of the Re z > 0 value.
  Cplx lhs = gamma({-0.5, 0.0});
  Cplx rhs = gamma({0.5, 0.0}) / Cplx{-0.5, 0.0};
  CHECK(dist(lhs, rhs) <= 1e-11 * std::abs(rhs));
  CHECK(std::abs(lhs - Cplx{-2.0 * std::sqrt(kPi), 0.0}) <= 1e-11);
}

TEST_CASE("half-angle trig: exact zeros and pinned values") {
  CHECK(cos_half_pi({1.0, 0.0}) == Cplx{0.0, 0.0});
  CHECK(cos_half_pi({-7.0, 0.0}) == Cplx{0.0, 0.0});
  CHECK(cos_half_pi({301.0, 0.0}) == Cplx{0.0, 0.0});
  CHECK(sin_half_pi({0.0, 0.0}) == Cplx{0.0, 0.0});
  CHECK(sin_half_pi({2.0, 0.0}) == Cplx{0.0, 0.0});
  CHECK(sin_half_pi({-144.0, 0.0}) == Cplx{0.0, 0.0});
  CHECK(sin_half_pi({3.0, 0.0}) == Cplx{-1.0, 0.0});  // exactly -1
  CHECK(dist(cos_half_pi({0.5, 0.0}), {std::sqrt(2.0) / 2.0, 0.0}) <= 1e-15);
  // Real reduction kernels hit the lattice exactly too.
  CHECK(sin_pi(1.0) == 0.0);
  CHECK(sin_pi(-6.0) == 0.0);
  CHECK(cos_pi(0.5) == 0.0);
  CHECK(cos_pi(1.5) == 0.0);
  CHECK(sin_pi(2.5) == 1.0);
  CHECK(cos_pi(3.0) == -1.0);
}

TEST_CASE("pole and overflow errors") {
  CHECK_THROWS_AS(log_gamma({0.0, 0.0}), PoleError);
  CHECK_THROWS_AS(log_gamma({-7.0, 0.0}), PoleError);
  CHECK_THROWS_AS(gamma({-3.0, 0.0}), PoleError);
  try {
    gamma({-3.0, 0.0});
  } catch (const PoleError& e) {
    CHECK(e.info().kind == PoleInfo::Kind::gamma_pole);
    CHECK(e.info().location == Cplx{-3.0, 0.0});
  }
  // Gamma(172) is the first integer value past DBL_MAX.
  CHECK_NOTHROW(gamma({171.0, 0.0}));
  CHECK_THROWS_AS(gamma({172.0, 0.0}), OverflowError);
  CHECK_THROWS_AS(gamma({500.0, 0.0}), OverflowError);
  // log_gamma itself stays finite there.
  CHECK_NOTHROW(log_gamma({500.0, 0.0}));
}

TEST_CASE("property: recurrence Gamma(z+1) = z Gamma(z)") {
  std::mt19937 rng(20260815);
  std::uniform_real_distribution<double> re(0.5, 10.0);
  std::uniform_real_distribution<double> im(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    Cplx z{re(rng), im(rng)};
    Cplx up = gamma(z + 1.0);
    CHECK(dist(up, z * gamma(z)) <= 1e-12 * std::abs(up));
  }
}

TEST_CASE("property: reflection Gamma(x) Gamma(1-x) sin(pi x) = pi") {
  std::mt19937 rng(4096);
  std::uniform_real_distribution<double> draw(-5.0, 0.5);
  int done = 0;
  while (done < 100) {
    double x = draw(rng);
    if (std::abs(x - std::round(x)) < 1e-3) continue;  // stay off the poles
    Cplx p = gamma({x, 0.0}) * gamma({1.0 - x, 0.0}) * sin_pi(x);
    CHECK(std::abs(p - Cplx{kPi, 0.0}) <= 1e-10 * kPi);
    ++done;
  }
}

TEST_CASE("property: conjugate symmetry of log_gamma on Re z > 0") {
  const Cplx pts[] = {{0.7, 2.3}, {3.0, 0.5}, {5.5, 7.0}, {0.51, 0.1}, {12.0, -4.0}};
  for (Cplx z : pts) {
    Cplx a = log_gamma(std::conj(z));
    Cplx b = std::conj(log_gamma(z));
    CHECK(std::abs(a.real() - b.real()) <= 1e-13 * std::max(1.0, std::abs(b.real())));
    CHECK(std::abs(a.imag() - b.imag()) <= 1e-13 * std::max(1.0, std::abs(b.imag())));
  }
}

TEST_CASE("property: cos^2 + sin^2 = 1 for |Im s| <= 5") {
  // The two squares grow like e^{pi |Im s|} individually, so the identity is
  // asserted relative to their size; for |Im s| <= 1 it also holds absolutely.
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> re(-6.0, 6.0);
  std::uniform_real_distribution<double> im(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    Cplx s{re(rng), im(rng)};
    Cplx c = cos_half_pi(s);
    Cplx d = sin_half_pi(s);
    double scale = 1.0 + std::norm(c) + std::norm(d);
    CHECK(std::abs(c * c + d * d - 1.0) <= 1e-13 * scale);
  }
  std::uniform_real_distribution<double> im1(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    Cplx s{re(rng), im1(rng)};
    Cplx c = cos_half_pi(s);
    Cplx d = sin_half_pi(s);
    CHECK(std::abs(c * c + d * d - 1.0) <= 1e-13);
  }
}

TEST_CASE("expm1_c: cancellation-free near zero") {
  CHECK(expm1_c({0.0, 0.0}) == Cplx{0.0, 0.0});
  Cplx z{1e-9, 1e-9};
  // e^z - 1 = z + z^2/2 + ...; naive exp(z) - 1 would lose half the digits.
  Cplx expect = z + 0.5 * z * z;
  CHECK(dist(expm1_c(z), expect) <= 1e-15 * std::abs(z));
  // Agrees with the naive form where that form is accurate.
  Cplx w{0.7, -1.2};
  CHECK(dist(expm1_c(w), std::exp(w) - 1.0) <= 1e-15 * std::abs(std::exp(w)));
}
