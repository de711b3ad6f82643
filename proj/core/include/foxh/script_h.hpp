#pragma once

#include "foxh/params.hpp"

namespace foxh {

/// The Gamma-product ratio under the Mellin-Barnes integral, evaluated as
/// exp(sum of numerator log-Gammas - sum of denominator log-Gammas).
/// A denominator factor at one of its poles makes the value exactly 0.
/// Throws Error{AtPole} when s hits a pole of a numerator factor.
cplx script_h(const HParams& params, cplx s);

/// log of script_h; real part -inf when a denominator factor is infinite.
cplx log_script_h(const HParams& params, cplx s);

enum class Direction { PlusInfinity, MinusInfinity };

/// Modulus estimate of script_h(t + i sigma) as t -> +inf or t -> -inf:
///   +inf: A (e/t)^{-Delta t} delta^t t^{Re mu}
///   -inf: B (e/|t|)^{Delta |t|} delta^{-|t|} |t|^{Re mu}
struct ScriptHEstimate {
  Direction direction = Direction::PlusInfinity;
  double sigma = 0;
  double prefactor = 1;      // A or B
  double log_prefactor = 0;  // log A or log B, finite even when prefactor overflows
  double delta_cap = 0;
  double delta_small = 1;
  double mu_re = 0;
  /// False when a Gamma factor whose argument runs to -inf has zero ordinate, where
  /// the modulus oscillates through poles and no estimate holds.
  bool defined = true;

  double log_growth(double t) const;
  double growth(double t) const;
};

ScriptHEstimate script_h_estimate(const HParams& params, double sigma, Direction direction);

enum class ContourKind { LeftLoop, RightLoop, VerticalLine };

/// Integration path. Loops run between the horizontal lines Im s = phi1 and phi2;
/// the vertical line is Re s = sigma0 truncated to |Im s| <= half_height.
struct ContourSpec {
  ContourKind kind = ContourKind::VerticalLine;
  double phi1 = -1, phi2 = 1;
  double sigma0 = 0;
  double half_height = 1000;
};

}  // namespace foxh
