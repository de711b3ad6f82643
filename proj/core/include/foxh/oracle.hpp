#pragma once

#include <string>
#include <vector>

#include "foxh/params.hpp"
#include "foxh/script_h.hpp"

namespace foxh {

struct QuadratureResult {
  cplx value;
  double abs_error_estimate = 0;
  ContourSpec contour;
  long evaluations = 0;
  std::vector<std::string> diagnostics;
};

/// Vertical line halfway between the rightmost lower_b pole and the leftmost
/// upper_a pole.  With one family empty the line sits 1/2 beyond the other
/// family's extreme pole; with both empty at Re s = 0.
/// Throws ContourInvalid when the families overlap in real part.
ContourSpec auto_vertical_contour(const HParams& params);

/// (1/2 pi i) * integral of script_h(s) z^{-s} ds along a vertical line, by adaptive
/// Gauss-Kronrod on unit panels marching outward until three consecutive panels
/// fall below 1e-16 of the accumulated magnitude.
/// Throws ContourInvalid (loop contour, or the line does not separate the families)
/// and SlowDecay (integrand does not decay along the line, or half_height reached).
QuadratureResult quadrature_eval(const HParams& params, cplx z, const ContourSpec& contour);
QuadratureResult quadrature_eval(const HParams& params, cplx z);

struct ResidueResult {
  cplx value;
  double radius = 0;
  int nodes = 0;
};

/// (1/2 pi i) * circle integral of script_h(s) z^{-s} around pole_location.
/// radius <= 0 selects half the distance to the nearest other pole, capped at 0.25.
/// Throws MultiplePoleEnclosure unless exactly one pole location lies inside
/// (at the center), NonConvergent if node doubling stalls beyond 65536 nodes.
ResidueResult residue_check_detailed(const HParams& params, cplx pole_location, double radius, cplx z);
cplx residue_check(const HParams& params, cplx pole_location, double radius, cplx z);

}  // namespace foxh
