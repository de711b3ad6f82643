#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "foxh/params.hpp"

namespace foxh::testing {

using cld = std::complex<long double>;

/// log Gamma for Re z > 0: recurrence up to Re z + 20, then Stirling with 30
/// Bernoulli corrections, all in long double.
cld stirling_log_gamma(cld z);

/// One row of tests/data/gamma_reference.json (mpmath, 40 digits).
struct GammaReference {
  cplx z;
  cplx log_gamma;
  std::vector<std::pair<int, cplx>> polygamma;
};
const std::vector<GammaReference>& gamma_reference();

/// Relative error |a - b| / max(|b|, floor).
double rel_err(cplx a, cplx b, double floor = 1e-300);

struct Pair {
  cplx c;
  double w = 1.0;
};

/// H^{m,n}_{p,q} with p = upper.size(), q = lower.size().  Real parts and weights
/// that are short decimals get rational metadata attached.
HParams make_params(int m, int n, std::vector<Pair> upper, std::vector<Pair> lower, bool exact = true);

/// Brute-force grouping of one progression: every (index, shift) with shift <=
/// max_shift, compared pairwise in exact arithmetic.  Returns the multiplicity of
/// each member's location, in enumeration order (index-major).
std::vector<int> brute_force_multiplicities(const HParams& params, bool lower_family, long long max_shift);

/// Parameters whose LowerB poles are all simple and separated from the UpperA
/// family, drawn from a fixed-seed generator.
HParams random_simple_params(std::mt19937_64& rng);

/// Central finite-difference derivative of order r (r <= 4) with step h.
template <class F>
cplx finite_difference(F&& f, cplx x, int r, double h) {
  switch (r) {
    case 0: return f(x);
    case 1: return (f(x + h) - f(x - h)) / (2 * h);
    case 2: return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    case 3: return (f(x + 2 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2 * h)) / (2 * h * h * h);
    default: return (f(x + 2 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) + f(x - 2 * h)) / (h * h * h * h);
  }
}

}  // namespace foxh::testing
