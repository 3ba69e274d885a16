#include "malmsten/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace malmsten {
namespace {

// %.17g: the shortest fixed format that round-trips every finite double.
// Negative zero is normalised to "0": JSON parsers read the bare token "-0"
// as an integer, which has no signed zero, so "-0" would not round-trip.
void put_num(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void put_cplx(std::string& out, Cplx z) {
  out += "{\"re\":";
  put_num(out, z.real());
  out += ",\"im\":";
  put_num(out, z.imag());
  out += "}";
}

void put_quoted(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

std::string fmt_g(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

std::string params_string(const std::vector<ParamValue>& params, int precision) {
  std::string out;
  for (const ParamValue& p : params) {
    if (!out.empty()) out += ';';
    out += p.name;
    out += '=';
    out += format_complex(p.value, precision);
  }
  return out;
}

double get_num(const nlohmann::json& v) {
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return v.get<double>();
}

Cplx get_cplx(const nlohmann::json& v) {
  return {get_num(v.at("re")), get_num(v.at("im"))};
}

VerificationReport parse_report(const nlohmann::json& j) {
  VerificationReport rep;
  rep.tool_version = j.at("version").get<std::string>();
  const auto& grid = j.at("grid");
  rep.grid_description = grid.at("description").get<std::string>();
  for (const auto& a : grid.at("a_values")) rep.grid.a_values.push_back(get_num(a));
  for (const auto& s : grid.at("s_values")) rep.grid.s_values.push_back(get_cplx(s));
  for (const auto& n : grid.at("n_values"))
    rep.grid.n_values.push_back(n.get<long>());
  for (const auto& row : j.at("rows")) {
    IdentityCheck c;
    auto id = parse_identity(row.at("identity").get<std::string>());
    if (!id) throw std::runtime_error("report: unknown identity name");
    c.id = *id;
    for (const auto& p : row.at("params"))
      c.params.push_back({p.at("name").get<std::string>(), get_cplx(p)});
    c.lhs = get_cplx(row.at("lhs"));
    c.rhs = get_cplx(row.at("rhs"));
    c.abs_err = get_num(row.at("abs_err"));
    c.rel_err = get_num(row.at("rel_err"));
    c.pass = row.at("pass").get<bool>();
    c.tolerance = get_num(row.at("tolerance"));
    rep.rows.push_back(std::move(c));
  }
  rep.overall_pass = j.at("overall_pass").get<bool>();
  return rep;
}

}  // namespace

std::string to_json(const VerificationReport& report) {
  std::string out;
  out.reserve(512 + 256 * report.rows.size());
  out += "{\"version\":";
  put_quoted(out, report.tool_version);
  out += ",\"grid\":{\"description\":";
  put_quoted(out, report.grid_description);
  out += ",\"a_values\":[";
  for (size_t i = 0; i < report.grid.a_values.size(); ++i) {
    if (i) out += ',';
    put_num(out, report.grid.a_values[i]);
  }
  out += "],\"s_values\":[";
  for (size_t i = 0; i < report.grid.s_values.size(); ++i) {
    if (i) out += ',';
    put_cplx(out, report.grid.s_values[i]);
  }
  out += "],\"n_values\":[";
  for (size_t i = 0; i < report.grid.n_values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(report.grid.n_values[i]);
  }
  out += "]},\"rows\":[";
  for (size_t i = 0; i < report.rows.size(); ++i) {
    const IdentityCheck& c = report.rows[i];
    if (i) out += ',';
    out += "{\"identity\":";
    put_quoted(out, identity_name(c.id));
    out += ",\"params\":[";
    for (size_t k = 0; k < c.params.size(); ++k) {
      if (k) out += ',';
      out += "{\"name\":";
      put_quoted(out, c.params[k].name);
      out += ",\"re\":";
      put_num(out, c.params[k].value.real());
      out += ",\"im\":";
      put_num(out, c.params[k].value.imag());
      out += "}";
    }
    out += "],\"lhs\":";
    put_cplx(out, c.lhs);
    out += ",\"rhs\":";
    put_cplx(out, c.rhs);
    out += ",\"abs_err\":";
    put_num(out, c.abs_err);
    out += ",\"rel_err\":";
    put_num(out, c.rel_err);
    out += ",\"pass\":";
    out += c.pass ? "true" : "false";
    out += ",\"tolerance\":";
    put_num(out, c.tolerance);
    out += "}";
  }
  out += "],\"overall_pass\":";
  out += report.overall_pass ? "true" : "false";
  out += "}";
  return out;
}

VerificationReport report_from_json(const std::string& text) {
  try {
    return parse_report(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("report: malformed JSON: ") + e.what());
  }
}

std::string to_csv(const VerificationReport& report) {
  std::string out =
      "identity_id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass\n";
  for (const IdentityCheck& c : report.rows) {
    out += identity_name(c.id);
    out += ',';
    out += params_string(c.params, 17);
    out += ',';
    out += fmt_g(c.lhs.real(), 17) + ',' + fmt_g(c.lhs.imag(), 17) + ',';
    out += fmt_g(c.rhs.real(), 17) + ',' + fmt_g(c.rhs.imag(), 17) + ',';
    out += fmt_g(c.abs_err, 17) + ',' + fmt_g(c.rel_err, 17) + ',';
    out += c.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string to_table(const VerificationReport& report, int precision) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"identity", "params", "lhs", "rhs", "abs_err", "rel_err", "ok"});
  for (const IdentityCheck& c : report.rows) {
    cells.push_back({identity_name(c.id), params_string(c.params, precision),
                     format_complex(c.lhs, precision),
                     format_complex(c.rhs, precision), fmt_g(c.abs_err, 3),
                     fmt_g(c.rel_err, 3), c.pass ? "pass" : "FAIL"});
  }
  std::vector<size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  for (size_t r = 0; r < cells.size(); ++r) {
    for (size_t i = 0; i < cells[r].size(); ++i) {
      os << cells[r][i] << std::string(width[i] - cells[r][i].size(), ' ');
      os << (i + 1 < cells[r].size() ? "  " : "");
    }
    os << '\n';
    if (r == 0) {
      size_t total = 0;
      for (size_t wv : width) total += wv;
      os << std::string(total + 2 * (width.size() - 1), '-') << '\n';
    }
  }
  size_t passed = 0;
  for (const IdentityCheck& c : report.rows) passed += c.pass;
  os << (report.overall_pass ? "overall: PASS" : "overall: FAIL") << " ("
     << passed << "/" << report.rows.size() << " rows)\n";
  return os.str();
}

std::string eval_to_json(const EvalResult& r) {
  std::string out = "{\"value\":";
  put_cplx(out, r.value);
  out += ",\"err_estimate\":";
  put_num(out, r.err_estimate);
  out += ",\"method\":\"";
  out += method_name(r.method);
  out += "\",\"work\":";
  out += std::to_string(r.work);
  out += "}";
  return out;
}

std::string eval_to_csv(const EvalResult& r) {
  std::string out = "value_re,value_im,err_estimate,method,work\n";
  out += fmt_g(r.value.real(), 17) + ',' + fmt_g(r.value.imag(), 17) + ',';
  out += fmt_g(r.err_estimate, 17) + ',';
  out += method_name(r.method);
  out += ',' + std::to_string(r.work) + '\n';
  return out;
}

std::string eval_to_table(const EvalResult& r, int precision) {
  std::ostringstream os;
  os << "value        = " << format_complex(r.value, precision) << '\n'
     << "err_estimate = " << fmt_g(r.err_estimate, 3) << '\n'
     << "method       = " << method_name(r.method) << '\n'
     << "work         = " << r.work << '\n';
  return os.str();
}

std::optional<Cplx> parse_complex(const std::string& text) {
  if (text.empty()) return std::nullopt;

  auto parse_real = [](std::string part) -> std::optional<double> {
    if (!part.empty() && part.front() == '+') part.erase(0, 1);
    if (part.empty()) return std::nullopt;
    double v = 0.0;
    const char* b = part.data();
    const char* e = part.data() + part.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) return std::nullopt;
    return v;
  };

  if (text.back() != 'i') {
    auto re = parse_real(text);
    if (!re) return std::nullopt;
    return Cplx{*re, 0.0};
  }

  // Trailing 'i': split at the last sign that is not an exponent sign and not
  // the leading sign of the whole literal.
  std::string body = text.substr(0, text.size() - 1);
  size_t split = std::string::npos;
  for (size_t i = body.size(); i-- > 1;) {
    char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    re_part = "0";
    im_part = body;
  } else {
    re_part = body.substr(0, split);
    im_part = body.substr(split);
  }
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  auto re = parse_real(re_part);
  auto im = parse_real(im_part);
  if (!re || !im) return std::nullopt;
  return Cplx{*re, *im};
}

std::string format_complex(Cplx z, int precision) {
  if (std::isnan(z.real()) && std::isnan(z.imag())) return "nan";
  if (z.imag() == 0.0) return fmt_g(z.real(), precision);
  std::string out = fmt_g(z.real(), precision);
  out += z.imag() < 0.0 ? '-' : '+';
  out += fmt_g(std::abs(z.imag()), precision);
  out += 'i';
  return out;
}

}  // namespace malmsten
