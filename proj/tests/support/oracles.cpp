#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include <boost/math/special_functions/bernoulli.hpp>
#include <nlohmann/json.hpp>

#include "foxh/poles.hpp"
#include "foxh/rational.hpp"

namespace foxh::testing {

cld stirling_log_gamma(cld z) {
  if (z.real() <= 0) throw std::domain_error("stirling_log_gamma needs Re z > 0");
  cld shift_sum = 0;
  for (int k = 0; k < 20; ++k) shift_sum += std::log(z + static_cast<long double>(k));
  const cld w = z + 20.0L;
  const long double half_log_2pi = 0.918938533204672741780329736405617639861L;
  cld s = (w - 0.5L) * std::log(w) - w + half_log_2pi;
  cld wpow = w;
  const cld w2 = w * w;
  for (int k = 1; k <= 30; ++k) {
    long double b = boost::math::bernoulli_b2n<long double>(k);
    s += b / (static_cast<long double>(2 * k) * (2 * k - 1) * wpow);
    wpow *= w2;
  }
  return s - shift_sum;
}

const std::vector<GammaReference>& gamma_reference() {
  static const std::vector<GammaReference> rows = [] {
    std::ifstream in(FOXH_TEST_DATA_DIR "/gamma_reference.json");
    if (!in) throw std::runtime_error("missing gamma_reference.json");
    auto doc = nlohmann::json::parse(in);
    auto c = [](const nlohmann::json& j) { return cplx(j[0].get<double>(), j[1].get<double>()); };
    std::vector<GammaReference> out;
    for (const auto& p : doc["points"]) {
      GammaReference r{c(p["z"]), c(p["loggamma"]), {}};
      for (auto& [k, v] : p["polygamma"].items()) r.polygamma.emplace_back(std::stoi(k), c(v));
      out.push_back(std::move(r));
    }
    return out;
  }();
  return rows;
}

double rel_err(cplx a, cplx b, double floor) { return std::abs(a - b) / std::max(std::abs(b), floor); }

HParams make_params(int m, int n, std::vector<Pair> upper, std::vector<Pair> lower, bool exact) {
  RawParams raw;
  raw.m = m;
  raw.n = n;
  raw.p = static_cast<int>(upper.size());
  raw.q = static_cast<int>(lower.size());
  auto rat = [&](double x) { return exact ? recover_rational(x, 10000) : std::nullopt; };
  for (const auto& u : upper) raw.upper.push_back({u.c, u.w, rat(u.c.real()), rat(u.w)});
  for (const auto& l : lower) raw.lower.push_back({l.c, l.w, rat(l.c.real()), rat(l.w)});
  return validate(std::move(raw));
}

std::vector<int> brute_force_multiplicities(const HParams& params, bool lower_family, long long max_shift) {
  struct Loc {
    Rational re;
    double im;
  };
  std::vector<Loc> locs;
  if (lower_family) {
    for (int j = 0; j < params.m(); ++j) {
      const auto& b = params.lower()[j];
      Rational beta = *recover_rational(b.beta, 10000);
      Rational bre = *recover_rational(b.b.real(), 10000);
      for (long long l = 0; l <= max_shift; ++l) locs.push_back({-(bre + l) / beta, -b.b.imag() / b.beta});
    }
  } else {
    for (int i = 0; i < params.n(); ++i) {
      const auto& a = params.upper()[i];
      Rational alpha = *recover_rational(a.alpha, 10000);
      Rational are = *recover_rational(a.a.real(), 10000);
      for (long long k = 0; k <= max_shift; ++k) locs.push_back({(1 - are + k) / alpha, -a.a.imag() / a.alpha});
    }
  }
  std::vector<int> mult(locs.size(), 0);
  for (std::size_t x = 0; x < locs.size(); ++x)
    for (std::size_t y = 0; y < locs.size(); ++y)
      if (locs[x].re == locs[y].re && std::fabs(locs[x].im - locs[y].im) < 1e-12) ++mult[x];
  return mult;
}

HParams random_simple_params(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 2), num(-40, 40);
  const double weights[] = {0.5, 1.0, 1.5, 2.0, 0.25};
  std::uniform_int_distribution<int> pick(0, 4);
  for (;;) {
    int m = 1 + count(rng) % 2, extra_q = count(rng) % 2;
    int n = count(rng) % 2, extra_p = count(rng);
    auto draw = [&] { return Pair{cplx(num(rng) / 16.0, num(rng) % 3 == 0 ? num(rng) / 8.0 : 0.0), weights[pick(rng)]}; };
    std::vector<Pair> upper, lower;
    for (int i = 0; i < n + extra_p; ++i) upper.push_back(draw());
    for (int j = 0; j < m + extra_q; ++j) lower.push_back(draw());
    HParams params = make_params(m, n, upper, lower);
    auto ps = analyze_pole_structure(params, 8);
    if (ps.separation_ok && ps.lower_all_simple && ps.upper_all_simple) return params;
  }
}

}  // namespace foxh::testing
