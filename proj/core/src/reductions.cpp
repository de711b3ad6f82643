#include "foxh/reductions.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "foxh/errors.hpp"
#include "foxh/gamma.hpp"
#include "foxh/json_io.hpp"
#include "gauss_kronrod.hpp"

namespace foxh {

namespace detail {
std::string_view embedded_corpus_json();
}

namespace {

using ClosedForm = std::function<cplx(cplx)>;

const std::map<std::string, ClosedForm, std::less<>>& closed_forms() {
  static const std::map<std::string, ClosedForm, std::less<>> forms = {
      {"exp", [](cplx z) { return std::exp(-z); }},
      {"power_exp", [](cplx z) { return z * z * std::exp(-z); }},
      {"power_exp_complex", [](cplx z) { return std::pow(z, cplx(0.5, 0.25)) * std::exp(-z); }},
      {"exp_half", [](cplx z) { return 0.5 * std::exp(-std::sqrt(z)); }},
      {"bessel_k", [](cplx z) { return 2.0 * bessel_k0(2.0 * std::sqrt(z)); }},
      {"bessel_k_quarter", [](cplx z) { return bessel_k0(2.0 * std::pow(z, 0.25)); }},
      {"geometric", [](cplx z) { return 1.0 / (1.0 + z); }},
      {"mirror_exp", [](cplx z) { return std::exp(-1.0 / z); }},
      {"bessel_k_mirror", [](cplx z) { return 2.0 * bessel_k0(2.0 / std::sqrt(z)); }},
      {"g1011_beta",
       [](cplx z) -> cplx {
         if (std::abs(z) > 1) return 0.0;
         return std::pow(1.0 - z, 1.5) / std::tgamma(2.5);
       }},
  };
  return forms;
}

CaseValidity parse_validity(const nlohmann::json& v) {
  CaseValidity cv;
  std::string kind = v.at("kind").get<std::string>();
  if (kind == "entire")
    cv.kind = CaseValidity::Kind::Entire;
  else if (kind == "all_nonzero")
    cv.kind = CaseValidity::Kind::AllNonzero;
  else if (kind == "excluded_circle") {
    cv.kind = CaseValidity::Kind::ExcludedCircle;
    cv.radius = v.at("radius").get<double>();
  } else {
    throw Error(ErrorKind::ParseError, "unknown validity kind '" + kind + "'");
  }
  return cv;
}

std::vector<KnownCase> load_corpus() {
  std::vector<KnownCase> out;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(detail::embedded_corpus_json());
    for (const auto& entry : doc) {
      KnownCase kc{entry.at("id").get<std::string>(), entry.value("description", ""), entry.value("provenance", ""),
                   validate(params_from_json(entry.at("params"))), parse_validity(entry.at("validity")), {}};
      for (const auto& pt : entry.at("reference_points"))
        kc.reference_points.push_back({cplx(pt.at(0).get<double>(), pt.at(1).get<double>()),
                                       cplx(pt.at(2).get<double>(), pt.at(3).get<double>())});
      out.push_back(std::move(kc));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("corpus: ") + e.what());
  }
  return out;
}

}  // namespace

bool CaseValidity::contains(cplx z) const {
  switch (kind) {
    case Kind::Entire: return true;
    case Kind::AllNonzero: return z != cplx(0.0);
    case Kind::ExcludedCircle:
      return z != cplx(0.0) && std::fabs(std::abs(z) - radius) > 1e-12 * radius;
  }
  return false;
}

const std::vector<KnownCase>& known_cases() {
  static const std::vector<KnownCase> corpus = load_corpus();
  return corpus;
}

const KnownCase& known_case(std::string_view id) {
  for (const auto& kc : known_cases())
    if (kc.id == id) return kc;
  throw Error(ErrorKind::UnknownCase, "no corpus case '" + std::string(id) + "'");
}

cplx known_case_value(std::string_view id, cplx z) {
  const auto& kc = known_case(id);
  if (!kc.validity.contains(z)) throw Error(ErrorKind::OutOfDomain, "z outside the validity domain of " + kc.id);
  auto it = closed_forms().find(id);
  if (it == closed_forms().end()) throw Error(ErrorKind::UnknownCase, "no closed form for '" + std::string(id) + "'");
  return it->second(z);
}

cplx bessel_k0(cplx x) {
  if (!(x.real() > 0)) throw Error(ErrorKind::DomainError, "integral representation of K_0 needs Re x > 0");
  // exp(-Re x cosh t) < 1e-320 beyond t_max
  double t_max = std::acosh(740.0 / x.real() + 1.0) + 1.0;
  auto f = [&](double t) { return std::exp(-x * std::cosh(t)); };
  cplx acc = 0;
  for (double a = 0; a < t_max; a += 0.5) {
    double b = std::min(a + 0.5, t_max);
    acc += detail::adaptive_gk15(f, a, b, 1e-18 * std::abs(acc), 1e-15).value;
  }
  return acc;
}

}  // namespace foxh
