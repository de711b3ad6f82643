#include "foxh/jet.hpp"

#include <cmath>
#include <numbers>

#include "foxh/errors.hpp"
#include "foxh/gamma.hpp"

namespace foxh {

namespace {

void check_shape(const TaylorJet& a, const TaylorJet& b) {
  if (a.center != b.center) throw Error(ErrorKind::ShapeMismatch, "jets have different centers");
  if (a.coeffs.size() != b.coeffs.size()) throw Error(ErrorKind::ShapeMismatch, "jets have different orders");
}

}  // namespace

TaylorJet TaylorJet::constant(cplx center, cplx value, int order) {
  TaylorJet j{center, std::vector<cplx>(order + 1, 0.0)};
  j.coeffs[0] = value;
  return j;
}

TaylorJet TaylorJet::variable(cplx center, int order) {
  TaylorJet j{center, std::vector<cplx>(order + 1, 0.0)};
  if (order >= 1) j.coeffs[1] = 1.0;
  return j;
}

std::vector<cplx> TaylorJet::derivatives() const {
  std::vector<cplx> out(coeffs.size());
  double fact = 1.0;
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    if (r > 0) fact *= static_cast<double>(r);
    out[r] = coeffs[r] * fact;
  }
  return out;
}

TaylorJet jet_mul(const TaylorJet& a, const TaylorJet& b) {
  check_shape(a, b);
  TaylorJet out{a.center, std::vector<cplx>(a.coeffs.size(), 0.0)};
  for (std::size_t n = 0; n < a.coeffs.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k) out.coeffs[n] += a.coeffs[k] * b.coeffs[n - k];
  return out;
}

TaylorJet jet_add(const TaylorJet& a, const TaylorJet& b) {
  check_shape(a, b);
  TaylorJet out = a;
  for (std::size_t n = 0; n < a.coeffs.size(); ++n) out.coeffs[n] += b.coeffs[n];
  return out;
}

TaylorJet jet_scale(const TaylorJet& a, cplx factor) {
  TaylorJet out = a;
  for (auto& c : out.coeffs) c *= factor;
  return out;
}

TaylorJet jet_reciprocal(const TaylorJet& a) {
  if (a.coeffs.empty() || a.coeffs[0] == cplx(0.0))
    throw Error(ErrorKind::ZeroConstantTerm, "reciprocal of a jet with zero constant term");
  TaylorJet r{a.center, std::vector<cplx>(a.coeffs.size(), 0.0)};
  cplx inv0 = 1.0 / a.coeffs[0];
  r.coeffs[0] = inv0;
  for (std::size_t n = 1; n < a.coeffs.size(); ++n) {
    cplx acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += a.coeffs[k] * r.coeffs[n - k];
    r.coeffs[n] = -inv0 * acc;
  }
  return r;
}

TaylorJet jet_exp(const TaylorJet& a) {
  TaylorJet b{a.center, std::vector<cplx>(a.coeffs.size(), 0.0)};
  if (a.coeffs.empty()) return b;
  b.coeffs[0] = std::exp(a.coeffs[0]);
  for (std::size_t n = 1; n < a.coeffs.size(); ++n) {
    cplx acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * a.coeffs[k] * b.coeffs[n - k];
    b.coeffs[n] = acc / static_cast<double>(n);
  }
  return b;
}

TaylorJet jet_log(const TaylorJet& a) {
  if (a.coeffs.empty() || a.coeffs[0] == cplx(0.0))
    throw Error(ErrorKind::ZeroConstantTerm, "log of a jet with zero constant term");
  TaylorJet l{a.center, std::vector<cplx>(a.coeffs.size(), 0.0)};
  l.coeffs[0] = std::log(a.coeffs[0]);
  for (std::size_t n = 1; n < a.coeffs.size(); ++n) {
    cplx acc = static_cast<double>(n) * a.coeffs[n];
    for (std::size_t k = 1; k < n; ++k) acc -= static_cast<double>(k) * l.coeffs[k] * a.coeffs[n - k];
    l.coeffs[n] = acc / (static_cast<double>(n) * a.coeffs[0]);
  }
  return l;
}

TaylorJet log_gamma_jet(cplx offset, double scale, cplx center, int order) {
  cplx w = offset + scale * center;
  TaylorJet j{center, std::vector<cplx>(order + 1, 0.0)};
  j.coeffs[0] = log_gamma(w);
  double sp = 1.0, fact = 1.0;
  for (int r = 1; r <= order; ++r) {
    sp *= scale;
    fact *= r;
    j.coeffs[r] = polygamma(r - 1, w) * (sp / fact);
  }
  return j;
}

TaylorJet gamma_jet(cplx c, int order) { return jet_exp(log_gamma_jet(0.0, 1.0, c, order)); }

TaylorJet log_gamma_pole_jet(int k, double scale, cplx offset, cplx s0, int order) {
  cplx w = offset + scale * s0;
  double tol = 1e-12 * (1.0 + std::abs(offset) + std::fabs(scale) * std::abs(s0));
  if (k < 0 || std::abs(w + static_cast<double>(k)) > tol)
    throw Error(ErrorKind::NotAPole, "offset + scale * s0 is not -" + std::to_string(k));
  constexpr double pi = std::numbers::pi;
  TaylorJet j{s0, std::vector<cplx>(order + 1, 0.0)};
  // log((-1)^k / (k! scale)) with arg(scale) = pi for negative scale
  int sign_flips = (k + (scale < 0 ? 1 : 0)) % 2;
  j.coeffs[0] = cplx(-std::lgamma(k + 1.0) - std::log(std::fabs(scale)), pi * sign_flips);
  // u Gamma(u - k) = (-1)^k / k! * Gamma(1 + u) / prod_{r<=k} (1 - u/r), u = scale (s - s0)
  double sp = 1.0, fact = 1.0;
  for (int t = 1; t <= order; ++t) {
    sp *= scale;
    fact *= t;
    cplx psi_1 = polygamma(t - 1, 1.0);
    double harmonic = 0;  // sum_{r<=k} r^{-t}
    for (int r = k; r >= 1; --r) harmonic += std::pow(static_cast<double>(r), -t);
    j.coeffs[t] = psi_1 * (sp / fact) + harmonic * sp / t;
  }
  return j;
}

TaylorJet gamma_pole_jet(int k, double scale, cplx offset, cplx s0, int order) {
  return jet_exp(log_gamma_pole_jet(k, scale, offset, s0, order));
}

TaylorJet gamma_pole_jet(int k, double scale, cplx offset, int order) {
  return gamma_pole_jet(k, scale, offset, -(offset + static_cast<double>(k)) / scale, order);
}

}  // namespace foxh
