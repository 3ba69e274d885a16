#pragma once

#include <optional>
#include <string>

#include "malmsten/identities.hpp"
#include "malmsten/types.hpp"

namespace malmsten {

// Deterministic JSON writer: fixed key order, numbers at 17 significant
// digits (bit-exact round trip), non-finite values as null. Schema:
//   {version, grid:{description,a_values,s_values,n_values}, rows:[...],
//    overall_pass}
// with complex numbers as {re, im} and row fields exactly the IdentityCheck
// fields.
std::string to_json(const VerificationReport& report);

// Parses the schema above (null -> NaN). Throws std::runtime_error on
// malformed input.
VerificationReport report_from_json(const std::string& text);

// CSV columns: identity_id, params (semicolon-joined name=value), lhs_re,
// lhs_im, rhs_re, rhs_im, abs_err, rel_err, pass.
std::string to_csv(const VerificationReport& report);

// Human-readable table at `precision` significant digits.
std::string to_table(const VerificationReport& report, int precision = 15);

// EvalResult formatting for the eval/integrate commands.
std::string eval_to_json(const EvalResult& r);
std::string eval_to_csv(const EvalResult& r);
std::string eval_to_table(const EvalResult& r, int precision = 15);

// Complex CLI syntax: "1.5", "-0.25", "0.5+0.7i", "2-1i" (no spaces).
std::optional<Cplx> parse_complex(const std::string& text);

// "re" if im == 0, else "re+imi", at `precision` significant digits.
std::string format_complex(Cplx z, int precision = 17);

}  // namespace malmsten
