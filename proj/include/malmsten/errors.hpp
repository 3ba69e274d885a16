#pragma once

#include <stdexcept>
#include <string>

#include "malmsten/types.hpp"

namespace malmsten {

struct PoleInfo {
  enum class Kind { gamma_pole, zeta_pole };

  Cplx location{0.0, 0.0};
  Kind kind = Kind::gamma_pole;
};

// Common base so callers can catch the whole family at once.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation requested exactly at a pole (Gamma at a non-positive integer,
// zeta/lambda at s = 1).
class PoleError : public Error {
 public:
  PoleError(const std::string& msg, PoleInfo info) : Error(msg), info_(info) {}
  const PoleInfo& info() const { return info_; }

 private:
  PoleInfo info_;
};

// Removable singular point where the safe-division threshold is crossed
// (zeta at s = 1 + 2*pi*i*k/ln 2, k != 0).
class NearPoleError : public Error {
 public:
  NearPoleError(const std::string& msg, Cplx location)
      : Error(msg), location_(location) {}
  Cplx location() const { return location_; }

 private:
  Cplx location_;
};

// exp(log_gamma) would exceed the representable exponent range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// The term/level budget ran out before the tolerance estimate was met.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, double last_estimate, long work)
      : Error(msg), last_estimate_(last_estimate), work_(work) {}
  double last_estimate() const { return last_estimate_; }
  long work() const { return work_; }

 private:
  double last_estimate_;
  long work_;
};

// An integrand returned a non-finite value at a strictly interior node.
class NonFiniteError : public Error {
 public:
  NonFiniteError(const std::string& msg, double abscissa)
      : Error(msg), abscissa_(abscissa) {}
  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

// Argument outside an operation's stated domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace malmsten
