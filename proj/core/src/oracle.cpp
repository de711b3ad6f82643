#include "foxh/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "foxh/errors.hpp"
#include "foxh/poles.hpp"
#include "gauss_kronrod.hpp"

namespace foxh {

namespace {

constexpr double kPi = std::numbers::pi;

struct Gap {
  double lower_max = -INFINITY;  // rightmost lower_b pole
  double upper_min = INFINITY;   // leftmost upper_a pole
};

Gap pole_gap(const HParams& params) {
  Gap g;
  for (int j = 0; j < params.m(); ++j)
    g.lower_max = std::max(g.lower_max, -params.lower()[j].b.real() / params.lower()[j].beta);
  for (int i = 0; i < params.n(); ++i)
    g.upper_min = std::min(g.upper_min, (1.0 - params.upper()[i].a.real()) / params.upper()[i].alpha);
  return g;
}

cplx principal_log(cplx z) {
  if (z.imag() == 0) z = cplx(z.real(), 0.0);
  return std::log(z);
}

cplx integrand(const HParams& params, cplx s, cplx logz) {
  cplx l = log_script_h(params, s);
  if (std::isinf(l.real())) return 0.0;
  return std::exp(l - s * logz);
}

}  // namespace

ContourSpec auto_vertical_contour(const HParams& params) {
  Gap g = pole_gap(params);
  ContourSpec c;
  c.kind = ContourKind::VerticalLine;
  bool lo = std::isfinite(g.lower_max), up = std::isfinite(g.upper_min);
  if (lo && up) {
    if (!(g.lower_max < g.upper_min))
      throw Error(ErrorKind::ContourInvalid, "no vertical line separates the lower_b and upper_a poles");
    c.sigma0 = 0.5 * (g.lower_max + g.upper_min);
  } else if (lo) {
    c.sigma0 = g.lower_max + 0.5;
  } else if (up) {
    c.sigma0 = g.upper_min - 0.5;
  } else {
    c.sigma0 = 0;
  }
  return c;
}

QuadratureResult quadrature_eval(const HParams& params, cplx z) {
  return quadrature_eval(params, z, auto_vertical_contour(params));
}

QuadratureResult quadrature_eval(const HParams& params, cplx z, const ContourSpec& contour) {
  if (contour.kind != ContourKind::VerticalLine)
    throw Error(ErrorKind::ContourInvalid, "only vertical-line contours are integrated numerically");
  if (!(contour.half_height > 0)) throw Error(ErrorKind::ContourInvalid, "half_height must be positive");
  if (z == cplx(0.0)) throw Error(ErrorKind::ZeroArgument, "z = 0");
  Gap g = pole_gap(params);
  const double sigma0 = contour.sigma0;
  if (!(sigma0 > g.lower_max) || !(sigma0 < g.upper_min))
    throw Error(ErrorKind::ContourInvalid, "Re s = " + std::to_string(sigma0) +
                                               " does not separate the lower_b poles from the upper_a poles");

  auto inv = compute_invariants(params);
  const cplx logz = principal_log(z);
  const double argz = logz.imag();
  // |integrand| ~ |t|^power e^{-rate |t|} along the line
  const double rate_plus = kPi * inv.a_star / 2 - argz;
  const double rate_minus = kPi * inv.a_star / 2 + argz;
  if (inv.a_star <= 0 || rate_plus <= 0 || rate_minus <= 0)
    throw Error(ErrorKind::SlowDecay, "the integrand does not decay exponentially along the vertical line");
  double power = 0;
  for (int j = 0; j < params.q(); ++j) {
    const auto& l = params.lower()[j];
    double e = l.b.real() + l.beta * sigma0 - 0.5;
    power += j < params.m() ? e : -(0.5 - l.b.real() - l.beta * sigma0);
  }
  for (int i = 0; i < params.p(); ++i) {
    const auto& u = params.upper()[i];
    double e = 0.5 - u.a.real() - u.alpha * sigma0;
    power += i < params.n() ? e : -(u.a.real() + u.alpha * sigma0 - 0.5);
  }

  QuadratureResult res;
  res.contour = contour;
  auto f = [&](double t) { return integrand(params, cplx(sigma0, t), logz); };

  cplx total = 0;
  double magnitude = 0, err = 0;
  for (int side : {1, -1}) {
    const double rate = side > 0 ? rate_plus : rate_minus;
    int quiet = 0;
    std::vector<double> tail;
    bool done = false;
    for (double a = 0; a < contour.half_height; a += 1.0) {
      double b = std::min(a + 1.0, contour.half_height);
      auto pr = side > 0 ? detail::adaptive_gk15(f, a, b, 1e-17 * magnitude, 1e-14)
                         : detail::adaptive_gk15(f, -b, -a, 1e-17 * magnitude, 1e-14);
      total += pr.value;
      err += pr.error;
      res.evaluations += pr.evaluations;
      double mag = std::abs(pr.value);
      magnitude += mag;
      tail.push_back(mag);
      if (tail.size() > 3) tail.erase(tail.begin());
      quiet = mag < 1e-16 * magnitude ? quiet + 1 : 0;
      bool decreasing = power / std::max(b, 1.0) < rate;
      if (quiet >= 3 && decreasing) {
        for (double m : tail) err += m;
        done = true;
        break;
      }
    }
    if (!done)
      throw Error(ErrorKind::SlowDecay, "integrand still significant at |Im s| = " + std::to_string(contour.half_height));
  }
  res.value = total / (2 * kPi);
  res.abs_error_estimate = err / (2 * kPi);
  return res;
}

ResidueResult residue_check_detailed(const HParams& params, cplx pole_location, double radius, cplx z) {
  if (z == cplx(0.0)) throw Error(ErrorKind::ZeroArgument, "z = 0");
  auto coincides = [&](cplx loc) { return std::abs(loc - pole_location) <= 1e-12 * (1.0 + std::abs(loc)); };
  if (!(radius > 0)) {
    double nearest = INFINITY;
    for (const auto& p : poles_within(params, pole_location, 0.5))
      if (!coincides(p.location)) nearest = std::min(nearest, std::abs(p.location - pole_location));
    radius = std::min(0.25, 0.5 * nearest);
  }
  int at_center = 0;
  for (const auto& p : poles_within(params, pole_location, radius * (1 + 1e-9))) {
    if (coincides(p.location)) {
      ++at_center;
      continue;
    }
    throw Error(ErrorKind::MultiplePoleEnclosure,
                "another pole lies within distance " + std::to_string(std::abs(p.location - pole_location)));
  }
  if (at_center == 0) throw Error(ErrorKind::MultiplePoleEnclosure, "the circle encloses no pole group");

  const cplx logz = principal_log(z);
  auto node = [&](int k, int count) {
    double th = 2 * kPi * k / count;
    cplx e(std::cos(th), std::sin(th));
    return integrand(params, pole_location + radius * e, logz) * radius * e;
  };
  int count = 16;
  cplx sum = 0;
  double peak = 0;
  for (int k = 0; k < count; ++k) {
    cplx v = node(k, count);
    sum += v;
    peak = std::max(peak, std::abs(v));
  }
  cplx prev = sum / static_cast<double>(count);
  while (count < 65536) {
    for (int k = 1; k < 2 * count; k += 2) {
      cplx v = node(k, 2 * count);
      sum += v;
      peak = std::max(peak, std::abs(v));
    }
    count *= 2;
    cplx cur = sum / static_cast<double>(count);
    if (std::abs(cur - prev) <= 1e-10 * std::max(std::abs(cur), 1e-14 * peak)) return {cur, radius, count};
    prev = cur;
  }
  throw Error(ErrorKind::NonConvergent, "circle quadrature did not settle within 65536 nodes");
}

cplx residue_check(const HParams& params, cplx pole_location, double radius, cplx z) {
  return residue_check_detailed(params, pole_location, radius, z).value;
}

}  // namespace foxh
