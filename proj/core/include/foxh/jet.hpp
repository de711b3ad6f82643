#pragma once

#include <vector>

#include "foxh/params.hpp"

namespace foxh {

/// Truncated Taylor series sum_{r<=K} coeffs[r] (s - center)^r, coeffs[r] = f^{(r)}(center)/r!.
struct TaylorJet {
  cplx center;
  std::vector<cplx> coeffs;

  int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  const cplx& operator[](int r) const { return coeffs.at(r); }

  static TaylorJet constant(cplx center, cplx value, int order);
  static TaylorJet unit(cplx center, int order) { return constant(center, 1.0, order); }
  /// The jet of s - center.
  static TaylorJet variable(cplx center, int order);
  /// Raw derivatives f^{(r)}(center) = r! coeffs[r].
  std::vector<cplx> derivatives() const;
};

// All binary operations throw Error{ShapeMismatch} unless centers and orders agree.
TaylorJet jet_mul(const TaylorJet& a, const TaylorJet& b);
TaylorJet jet_add(const TaylorJet& a, const TaylorJet& b);
TaylorJet jet_scale(const TaylorJet& a, cplx factor);
/// Throws Error{ZeroConstantTerm} when a[0] == 0.
TaylorJet jet_reciprocal(const TaylorJet& a);
TaylorJet jet_exp(const TaylorJet& a);
/// Principal log of a[0] in the constant term; throws Error{ZeroConstantTerm}.
TaylorJet jet_log(const TaylorJet& a);

/// Jet of log Gamma(offset + scale s) at s = center; coefficient r >= 1 is
/// psi^{(r-1)}(w) scale^r / r! with w = offset + scale center.
TaylorJet log_gamma_jet(cplx offset, double scale, cplx center, int order);

/// Jet of Gamma at the analytic point c (exp of the log-Gamma jet).
TaylorJet gamma_jet(cplx c, int order);

/// Log-jet of (s - s0) Gamma(offset + scale s) around its pole s0 where
/// offset + scale s0 = -k.  The constant term is log((-1)^k / (k! scale)).
/// Throws Error{NotAPole} if offset + scale s0 misses -k by more than the pole tolerance.
TaylorJet log_gamma_pole_jet(int k, double scale, cplx offset, cplx s0, int order);

/// exp of log_gamma_pole_jet; leading coefficient (-1)^k / (k! scale).
TaylorJet gamma_pole_jet(int k, double scale, cplx offset, cplx s0, int order);

/// Shorthand for the pole of Gamma(offset + scale s) at -(offset + k)/scale.
TaylorJet gamma_pole_jet(int k, double scale, cplx offset, int order);

}  // namespace foxh
