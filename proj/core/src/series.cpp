#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "foxh/errors.hpp"
#include "foxh/series.hpp"

namespace foxh {

std::string_view to_string(Regime r) noexcept { return r == Regime::Zero ? "zero" : "infinity"; }

std::string_view to_string(Validity::Kind k) noexcept {
  switch (k) {
    case Validity::Kind::AllNonzero: return "all_nonzero";
    case Validity::Kind::Disk: return "disk";
    case Validity::Kind::Exterior: return "exterior";
    case Validity::Kind::Empty: return "none";
  }
  return "none";
}

namespace {

void require_separation(const HParams& params) {
  auto sep = check_separation(params);
  if (!sep.ok) throw Error(ErrorKind::SeparationViolated, sep.conflict);
}

cplx principal_log(cplx z) {
  if (z.imag() == 0) z = cplx(z.real(), 0.0);  // -0.0 would select arg = -pi
  return std::log(z);
}

SeriesExpansion expand(const HParams& params, Regime about, long long max_shift) {
  require_separation(params);
  if (max_shift < 0) throw Error(ErrorKind::DomainError, "max_shift must be non-negative");
  auto inv = compute_invariants(params);
  SeriesExpansion e;
  e.about = about;
  e.truncation.max_shift = max_shift;
  PoleFamily family = about == Regime::Zero ? PoleFamily::LowerB : PoleFamily::UpperA;
  int sign = about == Regime::Zero ? inv.delta_sign : -inv.delta_sign;
  if (sign > 0) {
    e.validity.kind = Validity::Kind::AllNonzero;
  } else if (sign == 0) {
    e.validity.kind = about == Regime::Zero ? Validity::Kind::Disk : Validity::Kind::Exterior;
    e.validity.radius = inv.delta_small;
  } else {
    e.validity.kind = Validity::Kind::Empty;
    e.diagnostics.push_back("the sign of Delta gives this expansion no convergence domain");
  }
  auto grouped = complete_pole_groups(params, family, max_shift);
  e.truncation.power_bound = grouped.complete_power;
  if (grouped.groups.empty()) e.truncation.power_bound = about == Regime::Zero ? INFINITY : -INFINITY;
  for (const auto& g : grouped.groups) {
    auto gc = group_coefficients(params, g);
    auto vals = gc.values();
    for (int i = 0; i < static_cast<int>(vals.size()); ++i) e.terms.push_back({vals[i], g.power(), i});
    for (auto& d : gc.diagnostics) e.diagnostics.push_back(d);
  }
  return e;
}

struct Summation {
  cplx sum = 0;
  double err = 0;
  std::size_t terms = 0;
};

void add_group(Summation& acc, const GroupCoefficients& gc, cplx logz, double& group_mag) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  cplx pw = gc.pole.power();
  cplx base = gc.log_scale + pw * logz;
  double cond = 1.0 + std::abs(gc.log_scale) + std::abs(pw * logz);
  cplx lp = 1.0;
  group_mag = 0;
  for (const auto& m : gc.mantissa) {
    if (m != cplx(0.0)) {
      cplx t = std::exp(base) * m * lp;
      acc.sum += t;
      double a = std::abs(t);
      group_mag += a;
      acc.err += 4 * eps * cond * a;
    }
    lp *= logz;
    ++acc.terms;
  }
}

}  // namespace

SeriesExpansion expand_near_zero(const HParams& params, long long max_shift) {
  return expand(params, Regime::Zero, max_shift);
}

SeriesExpansion expand_near_infinity(const HParams& params, long long max_shift) {
  return expand(params, Regime::Infinity, max_shift);
}

cplx sum_expansion(const SeriesExpansion& e, cplx z) {
  cplx logz = principal_log(z);
  cplx acc = 0;
  for (const auto& t : e.terms) {
    if (t.coefficient == cplx(0.0)) continue;
    acc += t.coefficient * std::exp(t.power * logz) * std::pow(logz, t.log_power);
  }
  return acc;
}

EvalReport evaluate(const HParams& params, cplx z, double tolerance) {
  EvalOptions o;
  o.tolerance = tolerance;
  return evaluate(params, z, o);
}

EvalReport evaluate(const HParams& params, cplx z, const EvalOptions& options) {
  auto inv = compute_invariants(params);
  EvalReport rep;
  rep.verdict = classify_existence(inv, z, std::nullopt, ZeroPolicy::ReportNonExistent);
  if (!rep.verdict.exists) throw Error(ErrorKind::NotInDomain, "H does not exist at this z");
  if (rep.verdict.boundary_case)
    throw Error(ErrorKind::NotInDomain, "the residue series is not evaluated on the boundary |z| = delta");
  require_separation(params);

  const bool zero_series = rep.verdict.contour == Contour::LeftLoop;
  rep.expansion_used = zero_series ? Regime::Zero : Regime::Infinity;
  const PoleFamily family = zero_series ? PoleFamily::LowerB : PoleFamily::UpperA;
  if ((zero_series && params.m() == 0) || (!zero_series && params.n() == 0)) {
    rep.value = 0;
    rep.diagnostics.push_back("no poles enclosed by the contour; H vanishes identically");
    return rep;
  }

  const cplx logz = principal_log(z);
  const double logabs = std::log(std::abs(z));
  const double ldelta = std::log(inv.delta_small);
  // d/dt log|term| along the series, from the modulus estimate of the integrand
  auto tail_slope = [&](double t) {
    t = std::max(t, 1.0);
    if (zero_series) return -inv.delta_cap * std::log(t) - ldelta + logabs + inv.mu.real() / t;
    return inv.delta_cap * std::log(t) + ldelta - logabs + inv.mu.real() / t;
  };

  Summation acc;
  std::vector<double> recent;
  long long shift = std::max<long long>(options.initial_shift, 1);
  std::size_t processed = 0;
  int small_run = 0;
  while (true) {
    auto grouped = complete_pole_groups(params, family, shift);
    bool stopped = false;
    for (; processed < grouped.groups.size(); ++processed) {
      const auto& g = grouped.groups[processed];
      auto gc = group_coefficients(params, g);
      for (auto& d : gc.diagnostics)
        if (std::find(rep.diagnostics.begin(), rep.diagnostics.end(), d) == rep.diagnostics.end())
          rep.diagnostics.push_back(d);
      double mag = 0;
      add_group(acc, gc, logz, mag);
      ++rep.groups_summed;
      recent.push_back(mag);
      if (recent.size() > 3) recent.erase(recent.begin());
      if (!std::isfinite(acc.sum.real()) || !std::isfinite(acc.sum.imag()))
        throw Error(ErrorKind::NoConvergence, "partial sum overflowed");
      small_run = mag <= options.tolerance * std::abs(acc.sum) ? small_run + 1 : 0;
      double t = std::fabs(g.power().real());
      if (small_run >= 3 && tail_slope(t) < 0) {
        stopped = true;
        ++processed;
        break;
      }
      if (rep.groups_summed >= options.max_groups)
        throw Error(ErrorKind::NoConvergence,
                    "stopping rule not met after " + std::to_string(options.max_groups) + " pole groups");
    }
    if (stopped) break;
    if (shift > (1LL << 24)) throw Error(ErrorKind::NoConvergence, "shift horizon exhausted");
    shift *= 2;
  }
  rep.value = acc.sum;
  rep.terms_summed = acc.terms;
  double tail = 0;
  for (double r : recent) tail += r;
  rep.abs_error_estimate = acc.err + tail;
  return rep;
}

std::vector<BatchItem> evaluate_batch(const HParams& params, const std::vector<cplx>& zs, const EvalOptions& options,
                                      unsigned threads) {
  std::vector<BatchItem> out(zs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(zs.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < zs.size(); i = next++) {
      try {
        out[i].report = evaluate(params, zs[i], options);
      } catch (const Error& e) {
        out[i].error = e;
      }
    }
  };
  if (threads <= 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return out;
}

AsymptoticTerm leading_term(const HParams& params, Regime regime) {
  const bool zero = regime == Regime::Zero;
  if (zero && params.m() == 0) throw Error(ErrorKind::EmptyFamily, "m = 0: no lower_b poles");
  if (!zero && params.n() == 0) throw Error(ErrorKind::EmptyFamily, "n = 0: no upper_a poles");
  auto inv = compute_invariants(params);
  if (zero && inv.delta_sign < 0) throw Error(ErrorKind::NotInDomain, "the expansion at zero needs Delta >= 0");
  if (!zero && inv.delta_sign > 0) throw Error(ErrorKind::NotInDomain, "the expansion at infinity needs Delta <= 0");
  require_separation(params);

  // with shift 0 the complete groups are exactly those at the extremal Re(power)
  auto grouped = complete_pole_groups(params, zero ? PoleFamily::LowerB : PoleFamily::UpperA, 0);
  const auto& groups = grouped.groups;
  std::size_t best = 0;
  for (std::size_t g = 1; g < groups.size(); ++g)
    if (groups[g].order() > groups[best].order()) best = g;

  AsymptoticTerm at;
  at.regime = regime;
  at.exponent = groups[best].power();
  at.log_power = static_cast<int>(groups[best].order()) - 1;
  for (const auto& g : groups) {
    if (g.order() != groups[best].order()) continue;
    if (same_location(g.location, g.exact_re, groups[best].location, groups[best].exact_re)) {
      at.coefficient += group_coefficients(params, g).values().back();
    } else {
      at.diagnostics.push_back("another pole group of the same order shares the extremal real exponent");
    }
  }
  if (at.coefficient == cplx(0.0)) at.diagnostics.push_back("leading coefficient vanishes");
  return at;
}

}  // namespace foxh
