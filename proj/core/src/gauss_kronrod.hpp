#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace foxh::detail {

struct PanelResult {
  std::complex<double> value;
  double error = 0;
  long evaluations = 0;
};

// 15-point Kronrod nodes on [-1, 1] (non-negative half) with the embedded 7-point Gauss rule.
inline constexpr std::array<double, 8> kXgk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                               0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                               0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                               0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                               0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                               0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                               0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                              0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
PanelResult gk15(F&& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  std::complex<double> fc = f(c);
  std::complex<double> k = fc * kWgk[7], g = fc * kWg[3];
  for (int t = 0; t < 7; ++t) {
    std::complex<double> f1 = f(c - h * kXgk[t]), f2 = f(c + h * kXgk[t]);
    k += kWgk[t] * (f1 + f2);
    if (t % 2 == 1) g += kWg[t / 2] * (f1 + f2);
  }
  return {k * h, std::abs((k - g) * h), 15};
}

// Recursive bisection until the Kronrod-Gauss difference is below abs_tol or rel_tol * |value|.
template <class F>
PanelResult adaptive_gk15(F&& f, double a, double b, double abs_tol, double rel_tol, int depth = 0) {
  PanelResult r = gk15(f, a, b);
  if (r.error <= std::max(abs_tol, rel_tol * std::abs(r.value)) || depth >= 40) return r;
  double m = 0.5 * (a + b);
  PanelResult left = adaptive_gk15(f, a, m, 0.5 * abs_tol, rel_tol, depth + 1);
  PanelResult right = adaptive_gk15(f, m, b, 0.5 * abs_tol, rel_tol, depth + 1);
  return {left.value + right.value, left.error + right.error, r.evaluations + left.evaluations + right.evaluations};
}

}  // namespace foxh::detail
