#pragma once

#include <complex>

namespace malmsten {

inline constexpr const char* kVersion = "1.0.0";

using Cplx = std::complex<double>;

// Which computation path produced a value. Every numeric answer carries this
// tag alongside an error estimate and a work counter.
enum class Method {
  direct_series,
  accelerated_series,
  functional_equation,
  closed_relation,
  quadrature,
};

inline constexpr const char* method_name(Method m) {
  switch (m) {
    case Method::direct_series: return "direct_series";
    case Method::accelerated_series: return "accelerated_series";
    case Method::functional_equation: return "functional_equation";
    case Method::closed_relation: return "closed_relation";
    case Method::quadrature: return "quadrature";
  }
  return "unknown";
}

struct EvalResult {
  Cplx value{0.0, 0.0};
  double err_estimate = 0.0;  // upper-bound estimate, not a guarantee
  Method method = Method::direct_series;
  long work = 0;  // terms or nodes consumed
};

struct SeriesSettings {
  enum class Acceleration { none, alternating_acceleration };

  double target_eps = 1e-13;  // absolute tolerance
  long max_terms = 10000;
  Acceleration acceleration = Acceleration::alternating_acceleration;
};

struct QuadratureSettings {
  enum class Transform { tanh_sinh_01, exp_sinh_0inf };

  double target_eps = 1e-11;
  int max_level = 10;  // halvings of the step, 1..12
  Transform transform = Transform::tanh_sinh_01;
};

}  // namespace malmsten
