#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foxh/errors.hpp"
#include "foxh/existence.hpp"
#include "foxh/params.hpp"
#include "foxh/poles.hpp"

namespace foxh {

enum class Regime { Zero, Infinity };

std::string_view to_string(Regime r) noexcept;

/// coefficient * z^power * (log z)^log_power, principal branches (arg z in (-pi, pi]).
struct SeriesTerm {
  cplx coefficient;
  cplx power;
  int log_power = 0;
};

struct Validity {
  enum class Kind { AllNonzero, Disk, Exterior, Empty };
  Kind kind = Kind::Empty;
  double radius = 0;  // delta for Disk / Exterior
};

std::string_view to_string(Validity::Kind k) noexcept;

struct Truncation {
  long long max_shift = 0;
  /// Every pole group with Re(power) <= power_bound (Zero) or >= power_bound
  /// (Infinity) is included in full; the omitted remainder is o(|z|^power_bound).
  double power_bound = 0;
};

struct SeriesExpansion {
  Regime about = Regime::Zero;
  std::vector<SeriesTerm> terms;  // sorted by Re(power), ascending for Zero, descending for Infinity
  Truncation truncation;
  Validity validity;
  std::vector<std::string> diagnostics;
};

/// Coefficients of one pole group in the expansion of H, kept in scaled form to
/// survive the huge Gamma values at large shifts: the coefficient of
/// z^power (log z)^i is exp(log_scale) * mantissa[i], i = 0..order-1.
/// For UpperA groups the minus sign of the residue sum is already applied.
struct GroupCoefficients {
  Pole pole;
  cplx log_scale;
  std::vector<cplx> mantissa;
  std::vector<std::string> diagnostics;

  std::vector<cplx> values() const;
};

/// Power-log coefficients of a pole group via Gamma jets and the Leibniz double sum.
/// Throws SeparationViolated if a factor of the other family is singular at the
/// group's location, and JetPrecisionLoss on catastrophic cancellation.
GroupCoefficients group_coefficients(const HParams& params, const Pole& group);

/// Residue coefficient at the simple pole -(b_j + l)/beta_j, from the closed
/// product formula (no jets).  Throws NotSimple or SeparationViolated.
cplx coeff_simple_b(const HParams& params, std::size_t j, long long l);

/// Expansion coefficient at the simple pole (1 - a_i + k)/alpha_i (includes the
/// minus sign of the UpperA residue sum).  Throws NotSimple or SeparationViolated.
cplx coeff_simple_a(const HParams& params, std::size_t i, long long k);

/// Coefficients of (log z)^i, i = 0..N-1, for a LowerB / UpperA pole group.
std::vector<cplx> coeff_log_b(const HParams& params, const Pole& group);
std::vector<cplx> coeff_log_a(const HParams& params, const Pole& group);

SeriesExpansion expand_near_zero(const HParams& params, long long max_shift = kDefaultMaxShift);
SeriesExpansion expand_near_infinity(const HParams& params, long long max_shift = kDefaultMaxShift);

/// Evaluates an expansion at z (no convergence control).
cplx sum_expansion(const SeriesExpansion& e, cplx z);

struct EvalOptions {
  double tolerance = 1e-10;
  long long initial_shift = kDefaultMaxShift;
  std::size_t max_groups = 10000;
};

struct EvalReport {
  cplx value;
  double abs_error_estimate = 0;
  Regime expansion_used = Regime::Zero;
  std::size_t terms_summed = 0;
  std::size_t groups_summed = 0;
  ExistenceVerdict verdict;
  std::vector<std::string> diagnostics;
};

/// Residue-series value of H at z.  Throws NotInDomain (no existence, or the
/// boundary |z| = delta), SeparationViolated, NoConvergence.
EvalReport evaluate(const HParams& params, cplx z, double tolerance = 1e-10);
EvalReport evaluate(const HParams& params, cplx z, const EvalOptions& options);

struct BatchItem {
  std::optional<EvalReport> report;
  std::optional<Error> error;
};

/// Evaluates every z independently on up to `threads` workers (0 = hardware
/// concurrency); results are in input order.
std::vector<BatchItem> evaluate_batch(const HParams& params, const std::vector<cplx>& zs,
                                      const EvalOptions& options = {}, unsigned threads = 0);

struct AsymptoticTerm {
  cplx coefficient;
  cplx exponent;
  int log_power = 0;
  Regime regime = Regime::Zero;
  std::vector<std::string> diagnostics;
};

/// Dominant term as z -> 0 (Zero) or z -> infinity (Infinity).  Among the pole
/// groups with extremal Re(power) the one of highest order wins.
/// Throws EmptyFamily, SeparationViolated, NotInDomain (wrong sign of Delta).
AsymptoticTerm leading_term(const HParams& params, Regime regime);

}  // namespace foxh
