#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "foxh/errors.hpp"
#include "foxh/existence.hpp"
#include "foxh/json_io.hpp"
#include "foxh/oracle.hpp"
#include "foxh/reductions.hpp"
#include "foxh/series.hpp"

namespace foxh::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string params_path, params_json, case_id;
  std::vector<std::string> z_args;
  double tolerance = 1e-10;
  long long max_shift = kDefaultMaxShift;
  std::string contour = "auto";
  std::string format = "json";
  bool abs = false, verbose = false;
  std::string loop;
  double sigma = 0;
  std::string about = "auto";
  bool leading = false;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

HParams load_params(const Options& o) {
  int sources = !o.params_path.empty() + !o.params_json.empty() + !o.case_id.empty();
  if (sources != 1) throw UsageError("exactly one of --params, --params-json, --case is required");
  HParams params = [&] {
    if (!o.case_id.empty()) return known_case(o.case_id).params;
    std::string text = o.params_json;
    if (!o.params_path.empty()) {
      std::ifstream in(o.params_path);
      if (!in) throw Error(ErrorKind::ParseError, "cannot read " + o.params_path);
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    return validate(parse_params_json(text));
  }();
  const char* exact = std::getenv("FOXH_EXACT");
  if (exact && std::string_view(exact) == "0") params = params.without_exact_data();
  return params;
}

std::vector<cplx> load_z(const Options& o, bool required) {
  std::vector<cplx> zs;
  for (const auto& arg : o.z_args)
    for (auto z : parse_z_list(arg)) zs.push_back(z);
  if (required && zs.empty()) throw UsageError("--z is required");
  return zs;
}

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

std::string fmt_cplx(cplx z) { return fmt("%.12g", z.real()) + (z.imag() < 0 ? "-" : "+") + fmt("%.12g", std::fabs(z.imag())) + "j"; }

int exit_code_for(const Error& e) { return e.kind() == ErrorKind::ParseError ? 2 : 1; }

void emit(std::ostream& out, const ordered_json& j) { out << dump_json(j) << '\n'; }

ContourSpec parse_contour(const std::string& spec, const HParams& params) {
  if (spec == "auto") return auto_vertical_contour(params);
  const std::string prefix = "vertical:";
  if (spec.rfind(prefix, 0) == 0) {
    ContourSpec c;
    c.kind = ContourKind::VerticalLine;
    char* end = nullptr;
    std::string num = spec.substr(prefix.size());
    c.sigma0 = std::strtod(num.c_str(), &end);
    if (num.empty() || *end != '\0') throw UsageError("bad contour '" + spec + "'");
    return c;
  }
  throw UsageError("contour must be 'auto' or 'vertical:SIGMA'");
}

int cmd_eval(const Options& o, std::ostream& out) {
  auto params = load_params(o);
  auto zs = load_z(o, true);
  EvalOptions eo;
  eo.tolerance = o.tolerance;
  eo.initial_shift = o.max_shift;
  auto results = evaluate_batch(params, zs, eo);
  int code = 0;
  if (o.format == "table") out << "z\tvalue\tabs_error_estimate\texpansion\n";
  for (std::size_t t = 0; t < zs.size(); ++t) {
    const auto& r = results[t];
    if (o.format == "table") {
      if (r.report)
        out << fmt_cplx(zs[t]) << '\t' << fmt_cplx(r.report->value) << '\t' << fmt("%.3g", r.report->abs_error_estimate)
            << '\t' << to_string(r.report->expansion_used) << '\n';
      else
        out << fmt_cplx(zs[t]) << "\terror\t" << r.error->what() << '\n';
    } else {
      ordered_json j;
      j["z"] = to_json(zs[t]);
      if (r.report) {
        auto body = to_json(*r.report);
        for (auto& [k, v] : body.items()) j[k] = v;
      } else {
        j["error"] = error_json(*r.error)["error"];
      }
      emit(out, j);
    }
    if (r.error) code = std::max(code, exit_code_for(*r.error));
  }
  return code;
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto params = load_params(o);
  auto zs = load_z(o, true);
  auto inv = compute_invariants(params);
  std::optional<Contour> loop;
  if (o.loop == "left")
    loop = Contour::LeftLoop;
  else if (o.loop == "right")
    loop = Contour::RightLoop;
  else if (!o.loop.empty())
    throw UsageError("--loop must be 'left' or 'right'");
  if (o.format == "table") out << "z\texists\tcontour\tcase\tboundary\n";
  for (auto z : zs) {
    auto v = classify_existence(inv, z, loop, ZeroPolicy::ReportNonExistent);
    if (o.format == "table") {
      out << fmt_cplx(z) << '\t' << (v.exists ? "yes" : "no") << '\t' << to_string(v.contour) << '\t'
          << to_string(v.case_tag) << '\t' << (v.boundary_case ? "yes" : "no") << '\n';
      continue;
    }
    ordered_json j;
    j["z"] = to_json(z);
    auto body = to_json(v);
    for (auto& [k, val] : body.items()) j[k] = val;
    if (o.abs) {
      double r = std::abs(z);
      j["abs_z"] = r;
      j["delta_small"] = inv.delta_small;
      j["abs_vs_delta"] = std::fabs(r - inv.delta_small) <= kBoundaryTolerance * inv.delta_small ? "equal"
                          : r < inv.delta_small                                               ? "inside"
                                                                                              : "outside";
    }
    if (o.verbose) {
      j["invariants"] = to_json(inv);
      j["poles"] = to_json(analyze_pole_structure(params, o.max_shift));
      j["estimate_plus"] = to_json(script_h_estimate(params, o.sigma, Direction::PlusInfinity));
      j["estimate_minus"] = to_json(script_h_estimate(params, o.sigma, Direction::MinusInfinity));
    }
    emit(out, j);
  }
  return 0;
}

int cmd_expand(const Options& o, std::ostream& out) {
  auto params = load_params(o);
  Regime about;
  if (o.about == "zero")
    about = Regime::Zero;
  else if (o.about == "infinity")
    about = Regime::Infinity;
  else if (o.about == "auto")
    about = compute_invariants(params).delta_sign >= 0 ? Regime::Zero : Regime::Infinity;
  else
    throw UsageError("--about must be zero, infinity or auto");
  auto e = about == Regime::Zero ? expand_near_zero(params, o.max_shift) : expand_near_infinity(params, o.max_shift);
  if (o.format == "table") {
    out << "power\tlog_power\tcoefficient\n";
    for (const auto& t : e.terms) out << fmt_cplx(t.power) << '\t' << t.log_power << '\t' << fmt_cplx(t.coefficient) << '\n';
    return 0;
  }
  auto j = to_json(e);
  if (o.leading) j["leading_term"] = to_json(leading_term(params, about));
  emit(out, j);
  return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  auto params = load_params(o);
  auto zs = load_z(o, true);
  auto contour = parse_contour(o.contour, params);
  int code = 0;
  if (o.format == "table") out << "z\tquadrature\tseries\tdifference\n";
  for (auto z : zs) {
    ordered_json j;
    j["z"] = to_json(z);
    try {
      auto q = quadrature_eval(params, z, contour);
      j["quadrature"] = to_json(q);
      try {
        auto r = evaluate(params, z, o.tolerance);
        j["series"] = to_json(r.value);
        j["difference"] = std::abs(r.value - q.value);
      } catch (const Error& e) {
        j["series"] = nullptr;
        j["series_error"] = error_json(e)["error"];
      }
    } catch (const Error& e) {
      j["error"] = error_json(e)["error"];
      code = std::max(code, exit_code_for(e));
    }
    if (o.format == "table") {
      auto cell = [&](const char* key) {
        if (!j.contains(key) || j[key].is_null()) return std::string("-");
        const auto& v = key == std::string("quadrature") ? j[key]["value"] : j[key];
        return fmt_cplx({v[0].get<double>(), v[1].get<double>()});
      };
      out << fmt_cplx(z) << '\t' << cell("quadrature") << '\t' << cell("series") << '\t'
          << (j.contains("difference") ? fmt("%.3g", j["difference"].get<double>()) : std::string("-")) << '\n';
    } else {
      emit(out, j);
    }
  }
  return code;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  int passed = 0, failed = 0;
  auto record = [&](const std::string& name, bool ok, const std::string& detail) {
    ok ? ++passed : ++failed;
    if (o.format == "table") {
      out << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : "  " + detail) << '\n';
      return;
    }
    ordered_json j;
    j["check"] = name;
    j["passed"] = ok;
    if (!detail.empty()) j["detail"] = detail;
    emit(out, j);
  };
  for (const auto& kc : known_cases()) {
    for (const auto& rp : kc.reference_points) {
      std::string name = "corpus " + kc.id + " z=" + fmt_cplx(rp.z);
      double scale = 1 + std::abs(rp.value);
      try {
        auto r = evaluate(kc.params, rp.z, o.tolerance);
        double err = std::abs(r.value - rp.value) / scale;
        double cf = std::abs(known_case_value(kc.id, rp.z) - rp.value) / scale;
        record(name, err <= 1e-9 && cf <= 1e-9, "series " + fmt("%.2e", err) + " closed_form " + fmt("%.2e", cf));
      } catch (const Error& e) {
        record(name, false, e.what());
      }
    }
    // order-one groups: the Leibniz assembly must reproduce the closed product formula
    for (auto family : {PoleFamily::LowerB, PoleFamily::UpperA}) {
      for (const auto& g : complete_pole_groups(kc.params, family, 5).groups) {
        if (g.order() != 1 || g.members.front().shift > 5) continue;
        const auto& mem = g.members.front();
        std::string name = "degeneracy " + kc.id + " " + std::string(to_string(family)) + "[" +
                           std::to_string(mem.index) + "] shift " + std::to_string(mem.shift);
        try {
          cplx simple = family == PoleFamily::LowerB ? coeff_simple_b(kc.params, mem.index, mem.shift)
                                                     : coeff_simple_a(kc.params, mem.index, mem.shift);
          cplx jet = family == PoleFamily::LowerB ? coeff_log_b(kc.params, g)[0] : coeff_log_a(kc.params, g)[0];
          double rel = std::abs(simple - jet) / std::max(std::abs(simple), 1e-300);
          record(name, rel <= 1e-12 || simple == jet, "relative " + fmt("%.2e", rel));
        } catch (const Error& e) {
          record(name, false, e.what());
        }
      }
    }
  }
  if (o.format == "table") {
    out << passed << " passed, " << failed << " failed\n";
  } else {
    ordered_json s;
    s["passed"] = passed;
    s["failed"] = failed;
    ordered_json j;
    j["summary"] = s;
    emit(out, j);
  }
  return failed == 0 ? 0 : 1;
}

void add_common(CLI::App* sub, Options& o, bool with_z) {
  sub->add_option("--params", o.params_path, "parameter JSON file");
  sub->add_option("--params-json", o.params_json, "parameter JSON document");
  sub->add_option("--case", o.case_id, "use the parameters of a built-in corpus case");
  if (with_z) sub->add_option("--z", o.z_args, "argument list: re, re+imj or [re,im]; separated by ',', ';' or spaces");
  sub->add_option("--tolerance", o.tolerance, "relative stopping tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-shift", o.max_shift, "initial shift horizon")->check(CLI::NonNegativeNumber);
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
}

}  // namespace

cplx parse_complex(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty complex number");
  if (s.front() == '[') {
    try {
      auto j = nlohmann::json::parse(s);
      if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(ErrorKind::ParseError, "expected [re, im]: '" + s + "'");
      return {j[0].get<double>(), j[1].get<double>()};
    } catch (const nlohmann::json::exception&) {
      throw Error(ErrorKind::ParseError, "expected [re, im]: '" + s + "'");
    }
  }
  auto bad = [&] { return Error(ErrorKind::ParseError, "cannot parse complex number '" + s + "'"); };
  auto is_unit = [](char c) { return c == 'j' || c == 'i'; };
  const char* p = s.c_str();
  char* end = nullptr;
  double a = std::strtod(p, &end);
  if (end == p) throw bad();
  if (*end == '\0') return {a, 0.0};
  if (is_unit(*end) && end[1] == '\0') return {0.0, a};
  if (*end != '+' && *end != '-') throw bad();
  char* end2 = nullptr;
  double b = std::strtod(end, &end2);
  if (end2 == end || !is_unit(*end2) || end2[1] != '\0') throw bad();
  return {a, b};
}

std::vector<cplx> parse_z_list(std::string_view text) {
  std::vector<cplx> out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    if (!trim(cur).empty()) out.push_back(parse_complex(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    bool sep = c == ';' || c == ' ' || c == '\t' || c == '\n' || (c == ',' && depth == 0);
    if (sep) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fox H-function evaluation, classification, expansion and oracle checks", "foxh"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "evaluate H(z) by residue series");
  add_common(eval, o, true);

  auto* classify = app.add_subcommand("classify", "existence classification for each z");
  add_common(classify, o, true);
  classify->add_flag("--abs", o.abs, "report |z| against delta");
  classify->add_flag("--verbose", o.verbose, "add invariants, pole structure and the constants A, B");
  classify->add_option("--loop", o.loop, "requested contour: left or right");
  classify->add_option("--sigma", o.sigma, "ordinate for the A, B estimates (with --verbose)");

  auto* expand = app.add_subcommand("expand", "power / power-log expansion");
  add_common(expand, o, false);
  expand->add_option("--about", o.about, "zero, infinity or auto");
  expand->add_flag("--leading", o.leading, "include the leading asymptotic term");

  auto* oracle = app.add_subcommand("oracle", "vertical-line quadrature next to the series value");
  add_common(oracle, o, true);
  oracle->add_option("--contour", o.contour, "auto or vertical:SIGMA");

  auto* selftest = app.add_subcommand("selftest", "corpus and degeneracy checks");
  selftest->add_option("--tolerance", o.tolerance, "relative stopping tolerance")->check(CLI::PositiveNumber);
  selftest->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    ordered_json j;
    j["error"] = {{"kind", "UsageError"}, {"detail", e.what()}};
    err << dump_json(j) << '\n';
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (expand->parsed()) return cmd_expand(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (selftest->parsed()) return cmd_selftest(o, out);
  } catch (const UsageError& e) {
    ordered_json j;
    j["error"] = {{"kind", "UsageError"}, {"detail", e.what()}};
    err << dump_json(j) << '\n';
    return 2;
  } catch (const Error& e) {
    out << dump_json(error_json(e)) << '\n';
    return exit_code_for(e);
  }
  return 2;
}

}  // namespace foxh::cli
