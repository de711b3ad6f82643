#include "foxh/script_h.hpp"

#include <cmath>
#include <numbers>

#include "foxh/errors.hpp"
#include "foxh/gamma.hpp"

namespace foxh {

cplx log_script_h(const HParams& params, cplx s) {
  const auto& up = params.upper();
  const auto& lo = params.lower();
  cplx acc = 0;
  for (int j = 0; j < params.m(); ++j) {
    cplx w = lo[j].b + lo[j].beta * s;
    if (is_gamma_pole(w)) throw Error(ErrorKind::AtPole, "s is a pole of Gamma(b_j + beta_j s), j = " + std::to_string(j));
    acc += log_gamma(w);
  }
  for (int i = 0; i < params.n(); ++i) {
    cplx w = 1.0 - up[i].a - up[i].alpha * s;
    if (is_gamma_pole(w))
      throw Error(ErrorKind::AtPole, "s is a pole of Gamma(1 - a_i - alpha_i s), i = " + std::to_string(i));
    acc += log_gamma(w);
  }
  bool zero = false;
  for (int i = params.n(); i < params.p(); ++i) {
    cplx w = up[i].a + up[i].alpha * s;
    if (is_gamma_pole(w))
      zero = true;
    else
      acc -= log_gamma(w);
  }
  for (int j = params.m(); j < params.q(); ++j) {
    cplx w = 1.0 - lo[j].b - lo[j].beta * s;
    if (is_gamma_pole(w))
      zero = true;
    else
      acc -= log_gamma(w);
  }
  if (zero) return cplx(-INFINITY, 0);
  return acc;
}

cplx script_h(const HParams& params, cplx s) {
  cplx l = log_script_h(params, s);
  if (std::isinf(l.real()) && l.real() < 0) return 0.0;
  return std::exp(l);
}

double ScriptHEstimate::log_growth(double t) const {
  double T = std::fabs(t);
  double ld = std::log(delta_small);
  if (direction == Direction::PlusInfinity)
    return log_prefactor - delta_cap * T * (1.0 - std::log(T)) + T * ld + mu_re * std::log(T);
  return log_prefactor + delta_cap * T * (1.0 - std::log(T)) - T * ld + mu_re * std::log(T);
}

double ScriptHEstimate::growth(double t) const { return std::exp(log_growth(t)); }

ScriptHEstimate script_h_estimate(const HParams& params, double sigma, Direction direction) {
  constexpr double pi = std::numbers::pi;
  const auto& up = params.upper();
  const auto& lo = params.lower();
  auto inv = compute_invariants(params);
  ScriptHEstimate est;
  est.direction = direction;
  est.sigma = sigma;
  est.delta_cap = inv.delta_cap;
  est.delta_small = inv.delta_small;
  est.mu_re = inv.mu.real();

  double lp = (params.m() + params.n() - 0.5 * (params.p() + params.q())) * std::log(2.0 * pi);
  for (const auto& l : lo) lp += (l.b.real() - 0.5) * std::log(l.beta);
  for (const auto& u : up) lp -= (u.a.real() - 0.5) * std::log(u.alpha);

  // factors whose Gamma argument runs to -inf contribute e^{-pi |y|}, with y their ordinate
  auto ord_a = [&](int i) { return std::fabs(sigma * up[i].alpha + up[i].a.imag()); };
  auto ord_b = [&](int j) { return std::fabs(sigma * lo[j].beta + lo[j].b.imag()); };
  if (direction == Direction::PlusInfinity) {
    for (int i = 0; i < params.n(); ++i) {
      lp -= pi * ord_a(i);
      est.defined = est.defined && ord_a(i) != 0;
    }
    for (int j = params.m(); j < params.q(); ++j) {
      lp += pi * ord_b(j);
      est.defined = est.defined && ord_b(j) != 0;
    }
  } else {
    for (int i = params.n(); i < params.p(); ++i) {
      lp += pi * ord_a(i);
      est.defined = est.defined && ord_a(i) != 0;
    }
    for (int j = 0; j < params.m(); ++j) {
      lp -= pi * ord_b(j);
      est.defined = est.defined && ord_b(j) != 0;
    }
  }
  est.log_prefactor = lp;
  est.prefactor = std::exp(lp);
  return est;
}

}  // namespace foxh
