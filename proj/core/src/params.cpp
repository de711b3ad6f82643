#include "foxh/params.hpp"

#include <cmath>
#include <string>

#include "foxh/errors.hpp"

namespace foxh {

HParams HParams::validate(RawParams raw) {
  if (raw.m < 0 || raw.n < 0 || raw.p < 0 || raw.q < 0)
    throw Error(ErrorKind::OrderViolation, "orders must be non-negative");
  if (raw.m > raw.q)
    throw Error(ErrorKind::OrderViolation, "m = " + std::to_string(raw.m) + " exceeds q = " + std::to_string(raw.q));
  if (raw.n > raw.p)
    throw Error(ErrorKind::OrderViolation, "n = " + std::to_string(raw.n) + " exceeds p = " + std::to_string(raw.p));
  if (static_cast<int>(raw.upper.size()) != raw.p)
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(raw.p) + " upper pairs, got " +
                                               std::to_string(raw.upper.size()));
  if (static_cast<int>(raw.lower.size()) != raw.q)
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(raw.q) + " lower pairs, got " +
                                               std::to_string(raw.lower.size()));

  HParams h;
  h.m_ = raw.m;
  h.n_ = raw.n;
  h.p_ = raw.p;
  h.q_ = raw.q;
  h.upper_exact_ = true;
  h.lower_exact_ = true;

  for (std::size_t i = 0; i < raw.upper.size(); ++i) {
    auto& u = raw.upper[i];
    if (!(u.alpha > 0) || !std::isfinite(u.alpha))
      throw Error(ErrorKind::NonPositiveWeight, "alpha[" + std::to_string(i) + "] must be positive");
    if (!std::isfinite(u.a.real()) || !std::isfinite(u.a.imag()))
      throw Error(ErrorKind::ParseError, "a[" + std::to_string(i) + "] is not finite");
    if (u.alpha_exact && *u.alpha_exact <= 0)
      throw Error(ErrorKind::NonPositiveWeight, "exact alpha[" + std::to_string(i) + "] must be positive");
    // an exact real part implies the weight should be read exactly too
    if (u.a_re_exact && !u.alpha_exact) u.alpha_exact = recover_rational(u.alpha);
    if (u.a_re_exact) u.a = cplx(to_double(*u.a_re_exact), u.a.imag());
    if (u.alpha_exact) u.alpha = to_double(*u.alpha_exact);
    h.upper_exact_ = h.upper_exact_ && u.a_re_exact && u.alpha_exact;
  }
  for (std::size_t j = 0; j < raw.lower.size(); ++j) {
    auto& l = raw.lower[j];
    if (!(l.beta > 0) || !std::isfinite(l.beta))
      throw Error(ErrorKind::NonPositiveWeight, "beta[" + std::to_string(j) + "] must be positive");
    if (!std::isfinite(l.b.real()) || !std::isfinite(l.b.imag()))
      throw Error(ErrorKind::ParseError, "b[" + std::to_string(j) + "] is not finite");
    if (l.beta_exact && *l.beta_exact <= 0)
      throw Error(ErrorKind::NonPositiveWeight, "exact beta[" + std::to_string(j) + "] must be positive");
    if (l.b_re_exact && !l.beta_exact) l.beta_exact = recover_rational(l.beta);
    if (l.b_re_exact) l.b = cplx(to_double(*l.b_re_exact), l.b.imag());
    if (l.beta_exact) l.beta = to_double(*l.beta_exact);
    h.lower_exact_ = h.lower_exact_ && l.b_re_exact && l.beta_exact;
  }
  h.upper_ = std::move(raw.upper);
  h.lower_ = std::move(raw.lower);
  return h;
}

HParams HParams::without_exact_data() const {
  HParams h = *this;
  for (auto& u : h.upper_) {
    u.a_re_exact.reset();
    u.alpha_exact.reset();
  }
  for (auto& l : h.lower_) {
    l.b_re_exact.reset();
    l.beta_exact.reset();
  }
  h.upper_exact_ = h.p_ == 0;
  h.lower_exact_ = h.q_ == 0;
  return h;
}

RawParams HParams::to_raw() const { return RawParams{m_, n_, p_, q_, upper_, lower_}; }

Invariants compute_invariants(const HParams& params) {
  Invariants inv;
  double sum_alpha = 0, sum_beta = 0, log_delta = 0;
  cplx sum_a, sum_b;
  for (int i = 0; i < params.p(); ++i) {
    const auto& u = params.upper()[i];
    sum_alpha += u.alpha;
    log_delta -= u.alpha * std::log(u.alpha);
    sum_a += u.a;
    inv.a_star += i < params.n() ? u.alpha : -u.alpha;
  }
  for (int j = 0; j < params.q(); ++j) {
    const auto& l = params.lower()[j];
    sum_beta += l.beta;
    log_delta += l.beta * std::log(l.beta);
    sum_b += l.b;
    inv.a_star += j < params.m() ? l.beta : -l.beta;
  }
  inv.delta_cap = sum_beta - sum_alpha;
  inv.delta_small = std::exp(log_delta);
  inv.mu = sum_b - sum_a + 0.5 * static_cast<double>(params.p() - params.q());

  bool weights_exact = true;
  for (const auto& u : params.upper()) weights_exact = weights_exact && u.alpha_exact.has_value();
  for (const auto& l : params.lower()) weights_exact = weights_exact && l.beta_exact.has_value();
  if (weights_exact) {
    Rational d = 0;
    for (const auto& u : params.upper()) d -= *u.alpha_exact;
    for (const auto& l : params.lower()) d += *l.beta_exact;
    inv.delta_sign = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (inv.delta_sign == 0) inv.delta_cap = 0;
  } else {
    double scale = sum_alpha + sum_beta;
    if (std::fabs(inv.delta_cap) <= 1e-12 * scale) {
      inv.delta_sign = 0;
      inv.delta_cap = 0;
    } else {
      inv.delta_sign = inv.delta_cap > 0 ? 1 : -1;
    }
  }
  return inv;
}

namespace {

std::optional<Rational> one_minus(const std::optional<Rational>& r) {
  if (!r) return std::nullopt;
  return Rational(1) - *r;
}

UpperParam upper_from_lower(const LowerParam& l) {
  return UpperParam{cplx(1.0) - l.b, l.beta, one_minus(l.b_re_exact), l.beta_exact};
}

LowerParam lower_from_upper(const UpperParam& u) {
  return LowerParam{cplx(1.0) - u.a, u.alpha, one_minus(u.a_re_exact), u.alpha_exact};
}

}  // namespace

HParams inverted_params(const HParams& params) {
  RawParams raw;
  raw.m = params.n();
  raw.n = params.m();
  raw.p = params.q();
  raw.q = params.p();
  for (const auto& l : params.lower()) raw.upper.push_back(upper_from_lower(l));
  for (const auto& u : params.upper()) raw.lower.push_back(lower_from_upper(u));
  return HParams::validate(std::move(raw));
}

HParams reciprocal_params(const HParams& params) {
  // Denominator factors become numerators at -s and vice versa.
  RawParams raw;
  raw.m = params.q() - params.m();
  raw.q = params.q();
  raw.n = params.p() - params.n();
  raw.p = params.p();
  auto flip_lower = [](const LowerParam& l) {
    return LowerParam{cplx(1.0) - l.b, l.beta, one_minus(l.b_re_exact), l.beta_exact};
  };
  auto flip_upper = [](const UpperParam& u) {
    return UpperParam{cplx(1.0) - u.a, u.alpha, one_minus(u.a_re_exact), u.alpha_exact};
  };
  for (int j = params.m(); j < params.q(); ++j) raw.lower.push_back(flip_lower(params.lower()[j]));
  for (int j = 0; j < params.m(); ++j) raw.lower.push_back(flip_lower(params.lower()[j]));
  for (int i = params.n(); i < params.p(); ++i) raw.upper.push_back(flip_upper(params.upper()[i]));
  for (int i = 0; i < params.n(); ++i) raw.upper.push_back(flip_upper(params.upper()[i]));
  return HParams::validate(std::move(raw));
}

}  // namespace foxh
