#pragma once

#include <optional>
#include <string_view>

#include "foxh/params.hpp"

namespace foxh {

/// LeftLoop starts and ends at -infinity (encloses the LowerB poles), RightLoop at
/// +infinity (encloses the UpperA poles).
enum class Contour { LeftLoop, RightLoop, Either, None };

/// The six existence regimes, named by contour, sign of Delta and position of |z|.
enum class ExistenceCase {
  LeftDeltaPositive,      // LeftLoop, Delta > 0, z != 0
  LeftDeltaZeroInside,    // LeftLoop, Delta = 0, 0 < |z| < delta
  LeftDeltaZeroBoundary,  // LeftLoop, Delta = 0, |z| = delta, Re mu < -1
  RightDeltaNegative,     // RightLoop, Delta < 0, z != 0
  RightDeltaZeroOutside,  // RightLoop, Delta = 0, |z| > delta
  RightDeltaZeroBoundary, // RightLoop, Delta = 0, |z| = delta, Re mu < -1
  None,
};

std::string_view to_string(Contour c) noexcept;
std::string_view to_string(ExistenceCase c) noexcept;

struct ExistenceVerdict {
  Contour contour = Contour::None;
  ExistenceCase case_tag = ExistenceCase::None;
  bool exists = false;
  bool boundary_case = false;  // Delta = 0 and |z| = delta
};

enum class ZeroPolicy { Throw, ReportNonExistent };

/// Relative tolerance for deciding |z| = delta.
constexpr double kBoundaryTolerance = 1e-12;

/// Without a requested contour the natural one is chosen: LeftLoop for Delta > 0 or
/// |z| < delta, RightLoop for Delta < 0 or |z| > delta, and Either on the boundary
/// when Re mu < -1 makes both loops converge.
ExistenceVerdict classify_existence(const HParams& params, cplx z, std::optional<Contour> requested = std::nullopt,
                                    ZeroPolicy zero = ZeroPolicy::Throw);

/// Same, reusing precomputed invariants.
ExistenceVerdict classify_existence(const Invariants& inv, cplx z, std::optional<Contour> requested = std::nullopt,
                                    ZeroPolicy zero = ZeroPolicy::Throw);

}  // namespace foxh
