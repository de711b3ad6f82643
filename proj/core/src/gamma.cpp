#include "foxh/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "foxh/errors.hpp"

namespace foxh {

namespace {

constexpr double kPi = std::numbers::pi;
const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

// B_2, B_4, ..., B_40
constexpr std::array<double, 20> kBernoulli = {
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
    43867.0 / 798,
    -174611.0 / 330,
    854513.0 / 138,
    -236364091.0 / 2730,
    8553103.0 / 6,
    -23749461029.0 / 870,
    8615841276005.0 / 14322,
    -7709321041217.0 / 510,
    2577687858367.0 / 6,
    -26315271553053477373.0 / 1919190,
    2929993913841559.0 / 6,
    -261082718496449122051.0 / 13530,
};

cplx stirling(cplx z) {
  cplx sum = (z - 0.5) * std::log(z) - z + kHalfLog2Pi;
  cplx zinv = 1.0 / z, z2inv = zinv * zinv, zp = zinv;
  for (int k = 1; k <= 12; ++k) {
    sum += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * zp;
    zp *= z2inv;
  }
  return sum;
}

// cot(pi z), stable away from the real axis
cplx cot_pi(cplx z) {
  const cplx i(0, 1);
  if (z.imag() < 0) return std::conj(cot_pi(std::conj(z)));
  cplx e = std::exp(2.0 * kPi * i * z);
  return i * (e + 1.0) / (e - 1.0);
}

// d^n/dx^n cot(x) written as a polynomial in c = cot x, evaluated at c
cplx cot_derivative(int n, cplx c) {
  std::vector<double> poly = {0.0, 1.0};  // P_0(c) = c
  for (int k = 0; k < n; ++k) {
    // P_{k+1} = -(1 + c^2) P_k'
    std::vector<double> d(poly.size() > 1 ? poly.size() - 1 : 1, 0.0);
    for (std::size_t t = 1; t < poly.size(); ++t) d[t - 1] = t * poly[t];
    std::vector<double> next(d.size() + 2, 0.0);
    for (std::size_t t = 0; t < d.size(); ++t) {
      next[t] -= d[t];
      next[t + 2] -= d[t];
    }
    poly = std::move(next);
  }
  cplx acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * c + *it;
  return acc;
}

// asymptotic series for psi^{(n)} at large |z|
cplx polygamma_asymptotic(int n, cplx z) {
  cplx zinv = 1.0 / z, z2inv = zinv * zinv;
  if (n == 0) {
    cplx sum = std::log(z) - 0.5 * zinv;
    cplx zp = z2inv;
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
      cplx term = kBernoulli[k - 1] / (2.0 * k) * zp;
      sum -= term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      zp *= z2inv;
    }
    return sum;
  }
  double fact_nm1 = std::tgamma(static_cast<double>(n));
  cplx zn = std::pow(zinv, n);
  cplx sum = fact_nm1 * zn + 0.5 * fact_nm1 * n * zn * zinv;
  cplx zp = zn * z2inv;
  double prev = INFINITY;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    // (2k + n - 1)! / (2k)!
    double ratio = 1.0;
    for (int t = 2 * static_cast<int>(k) + 1; t <= 2 * static_cast<int>(k) + n - 1; ++t) ratio *= t;
    cplx term = kBernoulli[k - 1] * ratio * zp;
    double mag = std::abs(term);
    if (mag > prev) break;
    sum += term;
    if (mag < 1e-18 * std::abs(sum)) break;
    prev = mag;
    zp *= z2inv;
  }
  return (n % 2 == 0 ? -1.0 : 1.0) * sum;
}

}  // namespace

bool is_gamma_pole(cplx z) noexcept {
  return z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real());
}

cplx log_gamma(cplx z) {
  if (is_gamma_pole(z)) throw Error(ErrorKind::PoleOfGamma, "log_gamma at non-positive integer");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(ErrorKind::DomainError, "log_gamma of a non-finite argument");
  if (z.real() < 0) {
    // reflection with log sin(pi z) = -log 2 + i pi/2 - i pi z + log(1 - e^{2 pi i z}) for Im z >= 0
    if (z.imag() < 0) return std::conj(log_gamma(std::conj(z)));
    const cplx i(0, 1);
    cplx logsin = -std::log(2.0) + i * (kPi / 2) - i * kPi * z + std::log(1.0 - std::exp(2.0 * kPi * i * z));
    cplx v = std::log(kPi) - logsin - log_gamma(1.0 - z);
    if (z.imag() == 0) v.imag(kPi * std::round(v.imag() / kPi));
    return v;
  }
  cplx shift = 0;
  while (z.real() < 10.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx rgamma(cplx z) {
  if (is_gamma_pole(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

cplx polygamma(int order, cplx z) {
  if (order < 0) throw Error(ErrorKind::DomainError, "polygamma order must be non-negative");
  if (is_gamma_pole(z)) throw Error(ErrorKind::PoleOfGamma, "polygamma at non-positive integer");
  if (z.real() < -60.0) {
    double sign = order % 2 == 0 ? 1.0 : -1.0;
    return sign * polygamma(order, 1.0 - z) - std::pow(kPi, order + 1) * cot_derivative(order, cot_pi(z));
  }
  const double threshold = 15.0 + 2.0 * order;
  double fact = std::tgamma(order + 1.0);
  double sign = order % 2 == 0 ? 1.0 : -1.0;
  cplx acc = 0;
  while (z.real() < threshold) {
    acc += std::pow(z, -(order + 1));
    z += 1.0;
  }
  return polygamma_asymptotic(order, z) - sign * fact * acc;
}

double log_gamma_abs_estimate(double x, double y, GammaAxis axis) {
  if (axis == GammaAxis::VerticalLimit) {
    if (y == 0) throw Error(ErrorKind::DomainError, "vertical estimate requires y != 0");
    double ay = std::fabs(y);
    return kHalfLog2Pi + (x - 0.5) * std::log(ay) - kPi * ay / 2;
  }
  if (x == 0) throw Error(ErrorKind::DomainError, "horizontal estimate requires x != 0");
  if (x < 0 && y == 0) throw Error(ErrorKind::DomainError, "horizontal estimate requires y != 0 when x < 0");
  double sgn = x > 0 ? 1.0 : -1.0;
  return kHalfLog2Pi + (x - 0.5) * std::log(std::fabs(x)) - x - kPi * (1.0 - sgn) * std::fabs(y) / 2;
}

double gamma_abs_estimate(double x, double y, GammaAxis axis) {
  return std::exp(log_gamma_abs_estimate(x, y, axis));
}

}  // namespace foxh
