#include "foxh/existence.hpp"

#include <cmath>

#include "foxh/errors.hpp"

namespace foxh {

std::string_view to_string(Contour c) noexcept {
  switch (c) {
    case Contour::LeftLoop: return "left_loop";
    case Contour::RightLoop: return "right_loop";
    case Contour::Either: return "either";
    case Contour::None: return "none";
  }
  return "none";
}

std::string_view to_string(ExistenceCase c) noexcept {
  switch (c) {
    case ExistenceCase::LeftDeltaPositive: return "left_delta_positive";
    case ExistenceCase::LeftDeltaZeroInside: return "left_delta_zero_inside";
    case ExistenceCase::LeftDeltaZeroBoundary: return "left_delta_zero_boundary";
    case ExistenceCase::RightDeltaNegative: return "right_delta_negative";
    case ExistenceCase::RightDeltaZeroOutside: return "right_delta_zero_outside";
    case ExistenceCase::RightDeltaZeroBoundary: return "right_delta_zero_boundary";
    case ExistenceCase::None: return "none";
  }
  return "none";
}

ExistenceVerdict classify_existence(const HParams& params, cplx z, std::optional<Contour> requested,
                                    ZeroPolicy zero) {
  return classify_existence(compute_invariants(params), z, requested, zero);
}

ExistenceVerdict classify_existence(const Invariants& inv, cplx z, std::optional<Contour> requested,
                                    ZeroPolicy zero) {
  ExistenceVerdict v;
  if (z == cplx(0.0)) {
    if (zero == ZeroPolicy::Throw) throw Error(ErrorKind::ZeroArgument, "z = 0 is outside every existence domain");
    return v;
  }
  if (requested && (*requested == Contour::Either || *requested == Contour::None))
    throw Error(ErrorKind::DomainError, "requested contour must be left_loop or right_loop");

  const double r = std::abs(z);
  const double d = inv.delta_small;
  int side = 0;  // sign of |z| - delta when Delta = 0
  if (inv.delta_sign == 0) {
    if (std::fabs(r - d) <= kBoundaryTolerance * d)
      side = 0;
    else
      side = r < d ? -1 : 1;
    v.boundary_case = side == 0;
  }
  const bool boundary_ok = inv.mu.real() < -1.0;

  auto left = [&]() -> ExistenceCase {
    if (inv.delta_sign > 0) return ExistenceCase::LeftDeltaPositive;
    if (inv.delta_sign < 0) return ExistenceCase::None;
    if (side < 0) return ExistenceCase::LeftDeltaZeroInside;
    if (side == 0 && boundary_ok) return ExistenceCase::LeftDeltaZeroBoundary;
    return ExistenceCase::None;
  };
  auto right = [&]() -> ExistenceCase {
    if (inv.delta_sign < 0) return ExistenceCase::RightDeltaNegative;
    if (inv.delta_sign > 0) return ExistenceCase::None;
    if (side > 0) return ExistenceCase::RightDeltaZeroOutside;
    if (side == 0 && boundary_ok) return ExistenceCase::RightDeltaZeroBoundary;
    return ExistenceCase::None;
  };

  if (requested) {
    v.case_tag = *requested == Contour::LeftLoop ? left() : right();
    v.exists = v.case_tag != ExistenceCase::None;
    v.contour = v.exists ? *requested : Contour::None;
    return v;
  }
  ExistenceCase l = left(), rr = right();
  if (l != ExistenceCase::None && rr != ExistenceCase::None) {
    v.contour = Contour::Either;
    v.case_tag = l;
  } else if (l != ExistenceCase::None) {
    v.contour = Contour::LeftLoop;
    v.case_tag = l;
  } else if (rr != ExistenceCase::None) {
    v.contour = Contour::RightLoop;
    v.case_tag = rr;
  }
  v.exists = v.case_tag != ExistenceCase::None;
  return v;
}

}  // namespace foxh
