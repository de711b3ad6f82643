#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "foxh/params.hpp"

namespace foxh {

/// LowerB: poles of Gamma(b_j + beta_j s), j < m, at -(b_j + l)/beta_j.
/// UpperA: poles of Gamma(1 - a_i - alpha_i s), i < n, at (1 - a_i + k)/alpha_i.
enum class PoleFamily { LowerB, UpperA };

std::string_view to_string(PoleFamily family) noexcept;

struct PoleMember {
  std::size_t index = 0;  // j (LowerB) or i (UpperA), 0-based
  long long shift = 0;    // l or k
  friend bool operator==(const PoleMember&, const PoleMember&) = default;
};

/// One pole location together with every Gamma factor that is singular there.
struct Pole {
  cplx location;
  PoleFamily family = PoleFamily::LowerB;
  std::vector<PoleMember> members;
  std::optional<Rational> exact_re;  // exact real part of location, when known

  std::size_t order() const noexcept { return members.size(); }
  /// Exponent of z carried by this pole's residue term: z^{-location}.
  cplx power() const noexcept { return -location; }
};

/// Location of a single member, recomputed from its defining formula.
cplx member_location(const HParams& params, PoleFamily family, const PoleMember& member);
std::optional<Rational> member_location_exact(const HParams& params, PoleFamily family, const PoleMember& member);

/// Coincidence policy: exact real parts when both sides carry them (imaginary parts
/// compared with the floating tolerance), else |x - y| <= 1e-12 (1 + max|x|,|y|).
bool same_location(cplx x, const std::optional<Rational>& x_exact, cplx y, const std::optional<Rational>& y_exact);

/// All members with shift <= max_shift, one Pole per member, ungrouped.
std::vector<Pole> enumerate_poles(const HParams& params, PoleFamily family, long long max_shift);

/// Groups equal locations.  Result ordered by ascending Re(power) for LowerB and
/// descending Re(power) for UpperA (the order in which series terms are summed).
std::vector<Pole> group_poles(std::vector<Pole> singletons);

struct PoleStructure {
  std::vector<Pole> lower_poles;  // every member with shift <= max_shift, grouped
  std::vector<Pole> upper_poles;
  bool separation_ok = true;      // no LowerB location equals an UpperA location
  bool lower_all_simple = true;
  bool upper_all_simple = true;
  bool separation_exhaustive = true;  // decided for all shifts, not just the horizon
  bool lower_simple_exhaustive = true;
  bool upper_simple_exhaustive = true;
  long long max_shift = 0;
  /// Groups with Re(power) <= lower_complete_power (LowerB) or
  /// Re(power) >= upper_complete_power (UpperA) provably have all of their members.
  double lower_complete_power = 0;
  double upper_complete_power = 0;
  std::vector<std::string> diagnostics;
};

constexpr long long kDefaultMaxShift = 64;

PoleStructure analyze_pole_structure(const HParams& params, long long max_shift = kDefaultMaxShift);

struct SeparationReport {
  bool ok = true;
  bool exhaustive = true;
  std::string conflict;  // human-readable description of the first coincidence
};

/// Decides whether any LowerB pole equals any UpperA pole, over all shifts.  Only a
/// bounded window of shifts can collide, so the answer is exhaustive unless the
/// window exceeds an internal budget.
SeparationReport check_separation(const HParams& params);

/// Complete groups of one family for shifts up to max_shift, in summation order.
struct GroupedPoles {
  std::vector<Pole> groups;
  double complete_power = 0;  // see PoleStructure
};
GroupedPoles complete_pole_groups(const HParams& params, PoleFamily family, long long max_shift);

/// Every member of `family` whose location equals `location` (all shifts).
std::vector<PoleMember> members_at(const HParams& params, PoleFamily family, cplx location,
                                   const std::optional<Rational>& exact_re = std::nullopt);

/// Every pole of either family within `radius` of `center`, ungrouped.
std::vector<Pole> poles_within(const HParams& params, cplx center, double radius);

}  // namespace foxh
