#include <cmath>
#include <cstdio>
#include <numbers>

#include "foxh/errors.hpp"
#include "foxh/gamma.hpp"
#include "foxh/jet.hpp"
#include "foxh/series.hpp"

namespace foxh {

namespace {

// One Gamma(offset + scale s) factor of the integrand.
struct Factor {
  cplx offset;
  double scale = 1;
  bool numerator = true;
  PoleFamily family = PoleFamily::LowerB;  // meaningful for numerator factors
  std::size_t index = 0;
  std::optional<Rational> offset_re_exact;
  std::optional<Rational> scale_exact;
};

std::vector<Factor> factors_of(const HParams& params) {
  std::vector<Factor> out;
  const auto& up = params.upper();
  const auto& lo = params.lower();
  auto neg = [](const std::optional<Rational>& r) -> std::optional<Rational> {
    if (!r) return std::nullopt;
    return Rational(-*r);
  };
  auto one_minus = [](const std::optional<Rational>& r) -> std::optional<Rational> {
    if (!r) return std::nullopt;
    return Rational(1 - *r);
  };
  for (int j = 0; j < params.m(); ++j)
    out.push_back({lo[j].b, lo[j].beta, true, PoleFamily::LowerB, std::size_t(j), lo[j].b_re_exact, lo[j].beta_exact});
  for (int i = 0; i < params.n(); ++i)
    out.push_back({1.0 - up[i].a, -up[i].alpha, true, PoleFamily::UpperA, std::size_t(i), one_minus(up[i].a_re_exact),
                   neg(up[i].alpha_exact)});
  for (int i = params.n(); i < params.p(); ++i)
    out.push_back({up[i].a, up[i].alpha, false, PoleFamily::UpperA, std::size_t(i), up[i].a_re_exact, up[i].alpha_exact});
  for (int j = params.m(); j < params.q(); ++j)
    out.push_back({1.0 - lo[j].b, -lo[j].beta, false, PoleFamily::LowerB, std::size_t(j), one_minus(lo[j].b_re_exact),
                   neg(lo[j].beta_exact)});
  return out;
}

// Returns k when offset + scale s0 = -k (a pole of this Gamma factor), nullopt otherwise.
std::optional<int> pole_index(const Factor& f, cplx s0, const std::optional<Rational>& s0_re) {
  cplx w = f.offset + f.scale * s0;
  double tol = 1e-12 * (1.0 + std::abs(f.offset) + std::fabs(f.scale) * std::abs(s0));
  if (f.offset_re_exact && f.scale_exact && s0_re) {
    Rational wr = *f.offset_re_exact + *f.scale_exact * *s0_re;
    if (!is_integer(wr) || wr > 0 || std::fabs(w.imag()) > tol) return std::nullopt;
    return static_cast<int>(-wr.convert_to<long long>());
  }
  if (w.real() > tol) return std::nullopt;
  double k = std::round(-w.real());
  if (k < 0 || k > 2e9 || std::abs(w + k) > tol) return std::nullopt;
  return static_cast<int>(k);
}

double distance_to_pole(cplx w) {
  double k = std::max(0.0, std::round(-w.real()));
  return std::abs(w + k);
}

std::string fmt(const char* pattern, double x) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

double binom(int n, int k) {
  double r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

void require_separation(const HParams& params) {
  auto sep = check_separation(params);
  if (!sep.ok) throw Error(ErrorKind::SeparationViolated, sep.conflict);
}

// Direct product formula for a simple pole of numerator factor `self`.
cplx simple_coefficient(const HParams& params, PoleFamily family, std::size_t index, long long shift) {
  require_separation(params);
  PoleMember mem{index, shift};
  cplx s0 = member_location(params, family, mem);
  auto s0_re = member_location_exact(params, family, mem);
  if (members_at(params, family, s0, s0_re).size() != 1)
    throw Error(ErrorKind::NotSimple, "pole " + std::string(to_string(family)) + "[" + std::to_string(index) +
                                          "] shift " + std::to_string(shift) + " is not simple");
  cplx acc = 0;
  double scale = 1;
  for (const auto& f : factors_of(params)) {
    if (f.numerator && f.family == family && f.index == index) {
      scale = f.scale;
      continue;
    }
    cplx w = f.offset + f.scale * s0;
    if (pole_index(f, s0, s0_re)) {
      if (f.numerator) throw Error(ErrorKind::NotSimple, "another numerator factor is singular at the pole");
      return 0.0;
    }
    if (f.numerator)
      acc += log_gamma(w);
    else
      acc -= log_gamma(w);
  }
  // residue of Gamma(offset + scale s) at the pole: (-1)^shift / (shift! scale)
  double lead_sign = (shift % 2 == 0 ? 1.0 : -1.0) * (scale < 0 ? -1.0 : 1.0);
  acc += -std::lgamma(static_cast<double>(shift) + 1.0) - std::log(std::fabs(scale));
  cplx residue = lead_sign * std::exp(acc);
  return family == PoleFamily::LowerB ? residue : -residue;
}

}  // namespace

std::vector<cplx> GroupCoefficients::values() const {
  std::vector<cplx> out;
  cplx scale = std::exp(log_scale);
  for (const auto& m : mantissa) out.push_back(m == cplx(0.0) ? cplx(0.0) : scale * m);
  return out;
}

GroupCoefficients group_coefficients(const HParams& params, const Pole& group) {
  const int N = static_cast<int>(group.order());
  if (N < 1) throw Error(ErrorKind::DomainError, "empty pole group");
  const cplx s0 = group.location;
  const int K = N;  // Taylor order N - 1 is needed; one guard coefficient
  GroupCoefficients gc;
  gc.pole = group;

  TaylorJet l1 = TaylorJet::constant(s0, 0.0, K);  // log of the pole factors (s - s0) Gamma(...)
  TaylorJet l2 = TaylorJet::constant(s0, 0.0, K);  // log of everything else
  int zeros = 0;
  std::vector<bool> used(group.members.size(), false);

  for (const auto& f : factors_of(params)) {
    std::optional<int> member_shift;
    if (f.numerator && f.family == group.family) {
      for (std::size_t t = 0; t < group.members.size(); ++t)
        if (group.members[t].index == f.index) {
          member_shift = static_cast<int>(group.members[t].shift);
          used[t] = true;
        }
    }
    if (member_shift) {
      l1 = jet_add(l1, log_gamma_pole_jet(*member_shift, f.scale, f.offset, s0, K));
      continue;
    }
    auto k = pole_index(f, s0, group.exact_re);
    if (k && f.numerator) {
      if (f.family != group.family)
        throw Error(ErrorKind::SeparationViolated, "a pole of the other family coincides with " + fmt("%.17g", s0.real()));
      throw Error(ErrorKind::DomainError, "pole group is missing a coincident member");
    }
    if (k) {
      // 1/Gamma vanishes here: 1/Gamma(w) = (s - s0) / [(s - s0) Gamma(w)]
      l2 = jet_add(l2, jet_scale(log_gamma_pole_jet(*k, f.scale, f.offset, s0, K), -1.0));
      ++zeros;
      continue;
    }
    cplx w = f.offset + f.scale * s0;
    if (distance_to_pole(w) < 1e-6)
      gc.diagnostics.push_back("ill-conditioned: a Gamma argument lies " + fmt("%.3g", distance_to_pole(w)) +
                               " from a pole; supply exact rationals if poles should coincide");
    auto lg = log_gamma_jet(f.offset, f.scale, s0, K);
    l2 = jet_add(l2, f.numerator ? lg : jet_scale(lg, -1.0));
  }
  for (bool u : used)
    if (!u) throw Error(ErrorKind::DomainError, "pole group member does not match a numerator factor");

  gc.log_scale = l1.coeffs[0] + l2.coeffs[0];
  gc.mantissa.assign(N, 0.0);
  if (zeros >= N) {
    gc.diagnostics.push_back("denominator zeros cancel the pole entirely");
    return gc;
  }
  l1.coeffs[0] = 0.0;
  l2.coeffs[0] = 0.0;
  auto d1 = jet_exp(l1).derivatives();
  auto m2 = jet_exp(l2);
  // multiply by (s - s0)^zeros
  TaylorJet shifted = TaylorJet::constant(s0, 0.0, K);
  for (int r = zeros; r <= K; ++r) shifted.coeffs[r] = m2.coeffs[r - zeros];
  auto d2 = shifted.derivatives();

  double fact = std::tgamma(static_cast<double>(N));
  double sum_abs = 0, max_abs = 0;
  for (int i = 0; i < N; ++i) {
    cplx acc = 0;
    for (int n = i; n <= N - 1; ++n) {
      cplx term = binom(N - 1, n) * binom(n, i) * d1[N - 1 - n] * d2[n - i];
      acc += term;
      sum_abs += std::abs(term);
    }
    acc *= (i % 2 == 0 ? 1.0 : -1.0) / fact;
    if (group.family == PoleFamily::UpperA) acc = -acc;
    gc.mantissa[i] = acc;
    max_abs = std::max(max_abs, std::abs(acc));
  }
  if (sum_abs > 0 && sum_abs / fact > 1e13 * max_abs)
    throw Error(ErrorKind::JetPrecisionLoss, "Leibniz sum cancels to " + fmt("%.3g", max_abs / (sum_abs / fact)) +
                                                 " of its summands");
  return gc;
}

cplx coeff_simple_b(const HParams& params, std::size_t j, long long l) {
  if (j >= static_cast<std::size_t>(params.m())) throw Error(ErrorKind::DomainError, "j must be below m");
  if (l < 0) throw Error(ErrorKind::DomainError, "shift must be non-negative");
  return simple_coefficient(params, PoleFamily::LowerB, j, l);
}

cplx coeff_simple_a(const HParams& params, std::size_t i, long long k) {
  if (i >= static_cast<std::size_t>(params.n())) throw Error(ErrorKind::DomainError, "i must be below n");
  if (k < 0) throw Error(ErrorKind::DomainError, "shift must be non-negative");
  return simple_coefficient(params, PoleFamily::UpperA, i, k);
}

std::vector<cplx> coeff_log_b(const HParams& params, const Pole& group) {
  if (group.family != PoleFamily::LowerB) throw Error(ErrorKind::DomainError, "expected a lower_b pole group");
  require_separation(params);
  return group_coefficients(params, group).values();
}

std::vector<cplx> coeff_log_a(const HParams& params, const Pole& group) {
  if (group.family != PoleFamily::UpperA) throw Error(ErrorKind::DomainError, "expected an upper_a pole group");
  require_separation(params);
  return group_coefficients(params, group).values();
}

}  // namespace foxh
