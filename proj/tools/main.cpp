// Command-line front end: evaluate the Dirichlet functions, run single
// integral representations, or sweep the full identity verification grid.
//
// Exit codes: 0 success / all rows passed; 1 usage error or failing rows;
// 2 pole, near-pole, domain or overflow error; 3 convergence or non-finite
// integrand error; 4 invalid verification grid override.

#include <cmath>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "malmsten/dirichlet.hpp"
#include "malmsten/errors.hpp"
#include "malmsten/gamma.hpp"
#include "malmsten/identities.hpp"
#include "malmsten/quadrature.hpp"
#include "malmsten/report.hpp"

namespace {

using namespace malmsten;

struct Options {
  double eps = 0.0;  // 0 => per-engine defaults
  int max_level = 10;
  long max_terms = 10000;
  std::string format;  // validated per subcommand
  int precision = 15;
};

SeriesSettings series_settings(const Options& o) {
  SeriesSettings s;
  if (o.eps > 0.0) s.target_eps = o.eps;
  s.max_terms = o.max_terms;
  return s;
}

QuadratureSettings quad_settings(const Options& o) {
  QuadratureSettings q;
  if (o.eps > 0.0) q.target_eps = o.eps;
  q.max_level = o.max_level;
  return q;
}

void add_common(CLI::App* cmd, Options& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--eps", o.eps,
                  "Target tolerance for both series and quadrature engines");
  cmd->add_option("--max-level", o.max_level,
                  "Quadrature refinement limit (1..12)");
  cmd->add_option("--max-terms", o.max_terms, "Series term budget");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--precision", o.precision,
                  "Significant digits in table output");
}

int print_eval(const EvalResult& r, const Options& o) {
  if (o.format == "json")
    std::cout << eval_to_json(r) << '\n';
  else if (o.format == "csv")
    std::cout << eval_to_csv(r);
  else
    std::cout << eval_to_table(r, o.precision);
  return 0;
}

// Evaluation errors map onto the documented exit-code families.
template <class Fn>
int guarded(Fn fn) {
  try {
    return fn();
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const NonFiniteError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {  // pole / near-pole / domain / overflow
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

int run_eval(const std::string& fn, const std::string& s_text, const Options& o) {
  auto s = parse_complex(s_text);
  if (!s || !std::isfinite(s->real()) || !std::isfinite(s->imag())) {
    std::cerr << "error: cannot parse '" << s_text
              << "' as a finite complex number (syntax: 1.5, -0.25, 0.5+0.7i)\n";
    return 1;
  }
  SeriesSettings scfg = series_settings(o);
  return guarded([&] {
    EvalResult r;
    if (fn == "eta")
      r = eta(*s, scfg);
    else if (fn == "beta")
      r = beta(*s, scfg);
    else if (fn == "lambda")
      r = lambda(*s, scfg);
    else if (fn == "zeta")
      r = zeta(*s, scfg);
    else {  // gamma: closed form, no series settings involved
      Cplx g = gamma(*s);
      r = {g, 5e-15 * std::abs(g), Method::closed_relation, 0};
    }
    return print_eval(r, o);
  });
}

struct IntegrateArgs {
  std::string name;
  double a = 0.0;
  bool has_a = false;
  std::string s_text;
  bool has_s = false;
  long n = 1;
  bool has_n = false;
};

int run_integrate(const IntegrateArgs& ia, const Options& o) {
  bool needs_a = ia.name == "kummer" || ia.name == "formula30-lhs";
  bool needs_s = ia.name == "formula30-lhs" || ia.name == "limit-lhs" ||
                 ia.name == "gamma-power" || ia.name == "gamma-log";
  bool needs_n = ia.name == "gamma-log";
  if ((needs_a && !ia.has_a) || (needs_s && !ia.has_s) || (needs_n && !ia.has_n)) {
    std::cerr << "error: " << ia.name << " requires"
              << (needs_a ? " --a" : "") << (needs_s ? " --s" : "")
              << (needs_n ? " --n" : "") << '\n';
    return 1;
  }
  Cplx s{0.0, 0.0};
  if (needs_s) {
    auto parsed = parse_complex(ia.s_text);
    if (!parsed || !std::isfinite(parsed->real()) || !std::isfinite(parsed->imag())) {
      std::cerr << "error: cannot parse --s '" << ia.s_text << "'\n";
      return 1;
    }
    s = *parsed;
  }
  QuadratureSettings qcfg = quad_settings(o);
  return guarded([&]() -> int {
    auto check_a = [&] {
      if (!(std::isfinite(ia.a) && ia.a > 0.0 && ia.a < std::numbers::pi))
        throw DomainError(ia.name + ": a must lie in (0, pi)");
    };
    EvalResult r;
    if (ia.name == "vardi") {
      r = vardi_lhs(qcfg);
    } else if (ia.name == "kummer") {
      check_a();
      r = kummer_lhs(ia.a, qcfg);
    } else if (ia.name == "formula30-lhs") {
      check_a();
      if (!(s.real() > 0.0 && s.real() < 1.0))
        throw DomainError("formula30-lhs: Re s must lie in (0, 1)");
      r = formula30_lhs(ia.a, s, qcfg);
    } else if (ia.name == "limit-lhs") {
      if (!(s.real() > 0.0 && s.real() < 1.0))
        throw DomainError("limit-lhs: Re s must lie in (0, 1)");
      r = limit_identity_lhs(s, qcfg);
    } else if (ia.name == "gamma-power") {
      if (!(s.real() < 2.0))
        throw DomainError("gamma-power: Re s must be < 2");
      r = gamma_integral_power_lhs(s, qcfg);
    } else {  // gamma-log
      if (ia.n < 1) throw DomainError("gamma-log: n must be >= 1");
      if (!(s.real() > 0.0))
        throw DomainError("gamma-log: Re s must be > 0");
      r = gamma_integral_log_lhs(ia.n, s, qcfg);
    }
    return print_eval(r, o);
  });
}

struct VerifyArgs {
  std::vector<std::string> identities;
  std::vector<double> a_values;
  std::vector<std::string> s_texts;
  std::vector<long> n_values;
};

int run_verify(const VerifyArgs& va, const Options& o) {
  std::vector<IdentityId> ids;
  if (va.identities.empty()) {
    ids.assign(std::begin(kAllIdentities), std::end(kAllIdentities));
  } else {
    for (const std::string& name : va.identities) {
      auto id = parse_identity(name);
      if (!id) {
        std::cerr << "error: unknown identity '" << name << "'\n";
        return 1;
      }
      ids.push_back(*id);
    }
  }

  // Grid overrides are validated fully before any output is produced.
  ParamGrid grid;
  grid.a_values = va.a_values;
  grid.n_values = va.n_values;
  for (const std::string& text : va.s_texts) {
    auto s = parse_complex(text);
    if (!s) {
      std::cerr << "error: cannot parse --s '" << text << "'\n";
      return 4;
    }
    grid.s_values.push_back(*s);
  }
  for (IdentityId id : ids) {
    if (auto why = grid_domain_violation(id, grid)) {
      std::cerr << "error: grid override out of domain: " << *why << '\n';
      return 4;
    }
  }

  VerificationReport rep = run_grid(grid, ids, quad_settings(o), series_settings(o));
  if (o.format == "csv")
    std::cout << to_csv(rep);
  else if (o.format == "table")
    std::cout << to_table(rep, o.precision);
  else
    std::cout << to_json(rep) << '\n';
  return rep.overall_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Dirichlet eta/beta/lambda/zeta evaluation and verification of their "
      "classical integral representations"};
  app.require_subcommand(1);

  Options eval_opts, int_opts, verify_opts;

  auto* eval_cmd = app.add_subcommand(
      "eval", "Evaluate eta|beta|lambda|zeta|gamma at a complex point");
  std::string eval_fn, eval_s;
  eval_cmd->add_option("function", eval_fn, "Function name")
      ->required()
      ->check(CLI::IsMember({"eta", "beta", "lambda", "zeta", "gamma"}));
  eval_cmd->add_option("s", eval_s, "Complex argument, e.g. 0.5+0.7i")->required();
  add_common(eval_cmd, eval_opts, "table");

  auto* int_cmd = app.add_subcommand(
      "integrate", "Evaluate one integral representation by quadrature");
  IntegrateArgs ia;
  int_cmd->add_option("name", ia.name, "Integral name")
      ->required()
      ->check(CLI::IsMember({"vardi", "kummer", "formula30-lhs", "limit-lhs",
                             "gamma-power", "gamma-log"}));
  auto* a_opt = int_cmd->add_option("--a", ia.a, "Angle parameter in (0, pi)");
  auto* s_opt = int_cmd->add_option("--s", ia.s_text, "Complex exponent");
  auto* n_opt = int_cmd->add_option("--n", ia.n, "Integer power, >= 1");
  add_common(int_cmd, int_opts, "table");

  auto* verify_cmd = app.add_subcommand(
      "verify", "Check identities over a parameter grid and report");
  VerifyArgs va;
  std::string verify_scope;
  auto* scope_opt =
      verify_cmd->add_option("scope", verify_scope, "Explicit sweep scope")
          ->check(CLI::IsMember({"all"}));
  verify_cmd
      ->add_option("--identities", va.identities,
                   "Comma-separated identity names (default: all)")
      ->delimiter(',')
      ->excludes(scope_opt);
  verify_cmd->add_option("--a", va.a_values, "Override a grid values");
  verify_cmd->add_option("--s", va.s_texts, "Override s grid values");
  verify_cmd->add_option("--n", va.n_values, "Override n grid values");
  add_common(verify_cmd, verify_opts, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (*eval_cmd) return run_eval(eval_fn, eval_s, eval_opts);
  if (*int_cmd) {
    ia.has_a = a_opt->count() > 0;
    ia.has_s = s_opt->count() > 0;
    ia.has_n = n_opt->count() > 0;
    return run_integrate(ia, int_opts);
  }
  return run_verify(va, verify_opts);
}
