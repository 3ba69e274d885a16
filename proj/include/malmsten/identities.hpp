#pragma once

#include <optional>
#include <string>
#include <vector>

#include "malmsten/types.hpp"

namespace malmsten {

enum class IdentityId {
  formula30,
  limit_identity,
  gamma_integral_power,
  gamma_integral_log,
  eta_fe,
  beta_fe,
  lambda_eta,
  vardi,
  kummer,
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::formula30,      IdentityId::limit_identity,
    IdentityId::gamma_integral_power, IdentityId::gamma_integral_log,
    IdentityId::eta_fe,         IdentityId::beta_fe,
    IdentityId::lambda_eta,     IdentityId::vardi,
    IdentityId::kummer,
};

const char* identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(const std::string& name);

// Default residual tolerance per identity: lambda_eta 1e-12, the two
// functional equations 1e-11, single-quadrature 1e-10, kummer 1e-9,
// double-quadrature 1e-8.
double default_tolerance(IdentityId id);

struct ParamValue {
  std::string name;
  Cplx value{0.0, 0.0};
};

struct IdentityCheck {
  IdentityId id = IdentityId::vardi;
  std::vector<ParamValue> params;
  Cplx lhs{0.0, 0.0};
  Cplx rhs{0.0, 0.0};
  double abs_err = 0.0;  // |lhs - rhs|
  double rel_err = 0.0;  // abs_err / max(|lhs|, |rhs|, 1e-300)
  bool pass = false;     // abs_err <= tolerance || rel_err <= tolerance
  double tolerance = 0.0;
};

// Parameter grid for run_grid. An empty component means "use that identity's
// default grid"; all a in (0, pi).
struct ParamGrid {
  std::vector<double> a_values;
  std::vector<Cplx> s_values;
  std::vector<long> n_values;
};

// Default grids.
std::vector<double> default_a_grid();           // {0.3, pi/3, pi/2, 2.0, 2.8}
std::vector<Cplx> default_strip_s_grid();       // {0.1, 0.25, 0.5, 0.75, 0.9}
std::vector<Cplx> default_fe_s_grid(IdentityId id);  // FE grids incl. complex points
std::vector<long> default_n_grid();             // {1, 2, 3, 5, 10}

// ---------------------------------------------------------------------------
// Raw side evaluators (also exposed through the CLI `integrate` command).
// Callers must respect the stated domains; the *_check operations validate.

// int_0^inf (e^{au}-e^{-au})/(e^{pi u}-e^{-pi u}) u^{-s} du   (0<a<pi, 0<Re s<1)
EvalResult formula30_lhs(double a, Cplx s, const QuadratureSettings& cfg = {});
// (sin a)/(Gamma(s) cos(pi s/2)) int_0^1 ln^{s-1}(1/y)/(1+2y cos a+y^2) dy
EvalResult formula30_rhs(double a, Cplx s, const QuadratureSettings& cfg = {});

// 2 cos(pi s/2) int_0^inf u^{1-s}/(e^{pi u}-e^{-pi u}) du     (0<Re s<1)
EvalResult limit_identity_lhs(Cplx s, const QuadratureSettings& cfg = {});
// (1/Gamma(s)) int_0^1 ln^{s-1}(1/y)/(1+y)^2 dy
EvalResult limit_identity_rhs(Cplx s, const QuadratureSettings& cfg = {});

// int_0^inf e^{-y} y^{1-s} dy                                  (Re s < 2)
EvalResult gamma_integral_power_lhs(Cplx s, const QuadratureSettings& cfg = {});
// int_0^1 ln^{s-1}(1/y) y^{n-1} dy                             (Re s > 0, n >= 1)
EvalResult gamma_integral_log_lhs(long n, Cplx s, const QuadratureSettings& cfg = {});

// int_0^1 ln ln(1/x) / (1+x^2) dx
EvalResult vardi_lhs(const QuadratureSettings& cfg = {});
// (pi/2) ln( sqrt(2 pi) Gamma(3/4) / Gamma(1/4) )
double vardi_rhs();

// int_0^1 ln ln(1/y) / (1+2y cos a+y^2) dy                     (0 < a < pi)
EvalResult kummer_lhs(double a, const QuadratureSettings& cfg = {});
// (pi/(2 sin a)) ln( (2 pi)^{a/pi} Gamma(1/2+a/(2 pi)) / Gamma(1/2-a/(2 pi)) )
double kummer_rhs(double a);

// ---------------------------------------------------------------------------
// Identity checks: both sides computed independently and compared.

IdentityCheck formula30_check(double a, Cplx s, const QuadratureSettings& qcfg = {},
                              const SeriesSettings& scfg = {});
IdentityCheck limit_identity_check(Cplx s, const QuadratureSettings& qcfg = {},
                                   const SeriesSettings& scfg = {});
IdentityCheck gamma_integral_power_check(Cplx s, const QuadratureSettings& qcfg = {});
IdentityCheck gamma_integral_log_check(long n, Cplx s, const QuadratureSettings& qcfg = {});
IdentityCheck eta_fe_check(Cplx s, const SeriesSettings& scfg = {});
IdentityCheck beta_fe_check(Cplx s, const SeriesSettings& scfg = {});
IdentityCheck lambda_eta_check(Cplx s, const SeriesSettings& scfg = {});
IdentityCheck vardi_check(const QuadratureSettings& qcfg = {});
IdentityCheck kummer_check(double a, const QuadratureSettings& qcfg = {});

// Returns a reason string if some value in `grid` violates `id`'s domain for a
// parameter that identity consumes, std::nullopt otherwise. Empty grid
// components (=> defaults) are always fine.
std::optional<std::string> grid_domain_violation(IdentityId id, const ParamGrid& grid);

struct VerificationReport {
  std::vector<IdentityCheck> rows;
  ParamGrid grid;                // the override grid (components empty => defaults)
  std::string grid_description;  // "defaults" or a summary of the overrides
  std::string tool_version;
  bool overall_pass = false;     // every row passed
};

// One IdentityCheck per (identity, parameter tuple), deterministically ordered
// by (identity_id, lexicographic parameters). Per-row errors are captured in
// the row (pass = false, NaN sides, params entry "error") and never abort the
// sweep.
VerificationReport run_grid(const ParamGrid& grid, const std::vector<IdentityId>& ids,
                            const QuadratureSettings& qcfg = {},
                            const SeriesSettings& scfg = {});

}  // namespace malmsten
