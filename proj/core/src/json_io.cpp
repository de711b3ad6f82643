#include "foxh/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "foxh/errors.hpp"

namespace foxh {

namespace {

cplx read_cplx_pair(const nlohmann::json& row, double& weight, const char* what) {
  if (!row.is_array() || row.size() != 3)
    throw Error(ErrorKind::ParseError, std::string(what) + " entries must be [re, im, weight]");
  for (const auto& v : row)
    if (!v.is_number()) throw Error(ErrorKind::ParseError, std::string(what) + " entries must be numbers");
  weight = row[2].get<double>();
  return {row[0].get<double>(), row[1].get<double>()};
}

std::vector<std::optional<Rational>> read_rationals(const nlohmann::json& rat, const char* key, std::size_t expected) {
  std::vector<std::optional<Rational>> out(expected);
  if (!rat.contains(key)) return out;
  const auto& arr = rat.at(key);
  if (!arr.is_array() || arr.size() != expected)
    throw Error(ErrorKind::ParseError, std::string("rational.") + key + " must have " + std::to_string(expected) +
                                           " entries");
  for (std::size_t t = 0; t < expected; ++t) {
    if (arr[t].is_null()) continue;
    if (arr[t].is_string())
      out[t] = parse_rational(arr[t].get<std::string>());
    else if (arr[t].is_number_integer())
      out[t] = Rational(arr[t].get<long long>());
    else
      throw Error(ErrorKind::ParseError, std::string("rational.") + key + " entries must be strings like \"1/2\"");
  }
  return out;
}

void write(std::string& out, const ordered_json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += ordered_json(it.key()).dump();
        out += ':';
        write(out, it.value());
      }
      out += '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      out += '[';
      for (std::size_t t = 0; t < j.size(); ++t) {
        if (t) out += ',';
        write(out, j[t]);
      }
      out += ']';
      break;
    }
    case nlohmann::json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      break;
    }
    default: out += j.dump();
  }
}

ordered_json finite_or_null(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

ordered_json strings(const std::vector<std::string>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

}  // namespace

RawParams params_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, "parameters must be a JSON object");
    RawParams raw;
    raw.m = doc.at("m").get<int>();
    raw.n = doc.at("n").get<int>();
    raw.p = doc.at("p").get<int>();
    raw.q = doc.at("q").get<int>();
    for (const auto& row : doc.at("upper")) {
      UpperParam u;
      u.a = read_cplx_pair(row, u.alpha, "upper");
      raw.upper.push_back(u);
    }
    for (const auto& row : doc.at("lower")) {
      LowerParam l;
      l.b = read_cplx_pair(row, l.beta, "lower");
      raw.lower.push_back(l);
    }
    if (doc.contains("rational")) {
      const auto& rat = doc.at("rational");
      if (!rat.is_object()) throw Error(ErrorKind::ParseError, "\"rational\" must be an object");
      auto ure = read_rationals(rat, "upper_re", raw.upper.size());
      auto ualpha = read_rationals(rat, "upper_alpha", raw.upper.size());
      auto lre = read_rationals(rat, "lower_re", raw.lower.size());
      auto lbeta = read_rationals(rat, "lower_beta", raw.lower.size());
      for (std::size_t t = 0; t < raw.upper.size(); ++t) {
        raw.upper[t].a_re_exact = ure[t];
        raw.upper[t].alpha_exact = ualpha[t];
      }
      for (std::size_t t = 0; t < raw.lower.size(); ++t) {
        raw.lower[t].b_re_exact = lre[t];
        raw.lower[t].beta_exact = lbeta[t];
      }
    }
    return raw;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

RawParams parse_params_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return params_from_json(doc);
}

ordered_json to_json(cplx z) { return ordered_json::array({finite_or_null(z.real()), finite_or_null(z.imag())}); }

ordered_json to_json(const HParams& params) {
  ordered_json j;
  j["m"] = params.m();
  j["n"] = params.n();
  j["p"] = params.p();
  j["q"] = params.q();
  j["upper"] = ordered_json::array();
  for (const auto& u : params.upper()) j["upper"].push_back({u.a.real(), u.a.imag(), u.alpha});
  j["lower"] = ordered_json::array();
  for (const auto& l : params.lower()) j["lower"].push_back({l.b.real(), l.b.imag(), l.beta});
  bool any = false;
  ordered_json rat;
  auto add = [&](const char* key, auto first, auto last, auto pick) {
    ordered_json arr = ordered_json::array();
    bool has = false;
    for (auto it = first; it != last; ++it) {
      const auto& r = pick(*it);
      if (r) {
        arr.push_back(to_string(*r));
        has = true;
      } else {
        arr.push_back(nullptr);
      }
    }
    if (has) {
      rat[key] = arr;
      any = true;
    }
  };
  add("upper_re", params.upper().begin(), params.upper().end(), [](const UpperParam& u) { return u.a_re_exact; });
  add("upper_alpha", params.upper().begin(), params.upper().end(), [](const UpperParam& u) { return u.alpha_exact; });
  add("lower_re", params.lower().begin(), params.lower().end(), [](const LowerParam& l) { return l.b_re_exact; });
  add("lower_beta", params.lower().begin(), params.lower().end(), [](const LowerParam& l) { return l.beta_exact; });
  if (any) j["rational"] = rat;
  return j;
}

ordered_json to_json(const Invariants& inv) {
  ordered_json j;
  j["delta_cap"] = inv.delta_cap;
  j["delta_small"] = inv.delta_small;
  j["mu"] = to_json(inv.mu);
  j["a_star"] = inv.a_star;
  return j;
}

ordered_json to_json(const ExistenceVerdict& v) {
  ordered_json j;
  j["exists"] = v.exists;
  j["contour"] = std::string(to_string(v.contour));
  j["case"] = std::string(to_string(v.case_tag));
  j["boundary_case"] = v.boundary_case;
  return j;
}

ordered_json to_json(const Pole& pole) {
  ordered_json j;
  j["location"] = to_json(pole.location);
  if (pole.exact_re) j["location_re_exact"] = to_string(*pole.exact_re);
  j["family"] = std::string(to_string(pole.family));
  j["order"] = pole.order();
  j["members"] = ordered_json::array();
  for (const auto& m : pole.members) j["members"].push_back({m.index, m.shift});
  return j;
}

ordered_json to_json(const PoleStructure& ps) {
  ordered_json j;
  j["separation_ok"] = ps.separation_ok;
  j["lower_all_simple"] = ps.lower_all_simple;
  j["upper_all_simple"] = ps.upper_all_simple;
  j["max_shift"] = ps.max_shift;
  j["diagnostics"] = strings(ps.diagnostics);
  return j;
}

ordered_json to_json(const SeriesExpansion& e) {
  ordered_json j;
  j["about"] = std::string(to_string(e.about));
  j["terms"] = ordered_json::array();
  for (const auto& t : e.terms) {
    ordered_json tj;
    tj["coeff"] = to_json(t.coefficient);
    tj["power"] = to_json(t.power);
    tj["log_power"] = t.log_power;
    j["terms"].push_back(tj);
  }
  ordered_json v;
  v["kind"] = std::string(to_string(e.validity.kind));
  if (e.validity.kind == Validity::Kind::Disk || e.validity.kind == Validity::Kind::Exterior)
    v["radius"] = e.validity.radius;
  j["validity"] = v;
  ordered_json tr;
  tr["max_shift"] = e.truncation.max_shift;
  tr["power_bound"] = finite_or_null(e.truncation.power_bound);
  j["truncation"] = tr;
  j["diagnostics"] = strings(e.diagnostics);
  return j;
}

ordered_json to_json(const EvalReport& r) {
  ordered_json j;
  j["value"] = to_json(r.value);
  j["abs_error_estimate"] = finite_or_null(r.abs_error_estimate);
  j["expansion_used"] = std::string(to_string(r.expansion_used));
  j["terms_summed"] = r.terms_summed;
  j["verdict"] = to_json(r.verdict);
  j["diagnostics"] = strings(r.diagnostics);
  return j;
}

ordered_json to_json(const AsymptoticTerm& t) {
  ordered_json j;
  j["regime"] = std::string(to_string(t.regime));
  j["coeff"] = to_json(t.coefficient);
  j["exponent"] = to_json(t.exponent);
  j["log_power"] = t.log_power;
  j["diagnostics"] = strings(t.diagnostics);
  return j;
}

ordered_json to_json(const QuadratureResult& q) {
  ordered_json j;
  j["value"] = to_json(q.value);
  j["abs_error_estimate"] = finite_or_null(q.abs_error_estimate);
  ordered_json c;
  c["kind"] = "vertical";
  c["sigma0"] = q.contour.sigma0;
  c["half_height"] = q.contour.half_height;
  j["contour"] = c;
  j["evaluations"] = q.evaluations;
  return j;
}

ordered_json to_json(const ScriptHEstimate& e) {
  ordered_json j;
  j["direction"] = e.direction == Direction::PlusInfinity ? "plus_infinity" : "minus_infinity";
  j["sigma"] = e.sigma;
  j["defined"] = e.defined;
  j["prefactor"] = finite_or_null(e.prefactor);
  j["log_prefactor"] = e.log_prefactor;
  return j;
}

ordered_json error_json(const Error& e) {
  ordered_json inner;
  inner["kind"] = std::string(to_string(e.kind()));
  inner["detail"] = e.detail();
  ordered_json j;
  j["error"] = inner;
  return j;
}

std::string dump_json(const ordered_json& j) {
  std::string out;
  write(out, j);
  return out;
}

}  // namespace foxh
