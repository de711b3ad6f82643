#pragma once

#include "foxh/params.hpp"

namespace foxh {

/// Principal branch of log Gamma(z), analytic off the non-positive real axis and
/// continuous from above onto it (log Gamma(-1/2) = log(2 sqrt(pi)) - i pi).
/// Throws Error{PoleOfGamma} at z = 0, -1, -2, ...
cplx log_gamma(cplx z);

/// Gamma(z) = exp(log_gamma(z)).
cplx gamma(cplx z);

/// 1/Gamma(z), zero at the non-positive integers.
cplx rgamma(cplx z);

/// psi^{(order)}(z), the derivative of order `order` of the digamma function.
cplx polygamma(int order, cplx z);

/// True when z is exactly 0, -1, -2, ...
bool is_gamma_pole(cplx z) noexcept;

enum class GammaAxis { HorizontalLimit, VerticalLimit };

/// Leading-order modulus of Gamma(x + iy):
///   HorizontalLimit (|x| -> inf): sqrt(2 pi) |x|^{x-1/2} e^{-x - pi (1 - sign x) |y| / 2}
///   VerticalLimit   (|y| -> inf): sqrt(2 pi) |y|^{x-1/2} e^{-pi |y| / 2}
/// Throws Error{DomainError} for x = 0 or (x < 0, y = 0) horizontally and y = 0 vertically.
double gamma_abs_estimate(double x, double y, GammaAxis axis);
double log_gamma_abs_estimate(double x, double y, GammaAxis axis);

}  // namespace foxh
