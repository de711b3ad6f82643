#include "foxh/poles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

namespace foxh {

namespace {

// Both families are arithmetic progressions loc = sign * (c + shift) / w:
// LowerB has c = b_j, w = beta_j, sign = -1; UpperA has c = 1 - a_i, w = alpha_i, sign = +1.
struct Progression {
  cplx c;
  double w = 1;
  std::optional<Rational> c_re_exact;
  std::optional<Rational> w_exact;
  double sign = -1;
  bool exact() const { return c_re_exact && w_exact; }
};

std::vector<Progression> progressions(const HParams& params, PoleFamily family) {
  std::vector<Progression> out;
  if (family == PoleFamily::LowerB) {
    for (int j = 0; j < params.m(); ++j) {
      const auto& l = params.lower()[j];
      out.push_back({l.b, l.beta, l.b_re_exact, l.beta_exact, -1.0});
    }
  } else {
    for (int i = 0; i < params.n(); ++i) {
      const auto& u = params.upper()[i];
      std::optional<Rational> c;
      if (u.a_re_exact) c = Rational(1) - *u.a_re_exact;
      out.push_back({cplx(1.0) - u.a, u.alpha, c, u.alpha_exact, 1.0});
    }
  }
  return out;
}

cplx location_of(const Progression& pr, long long shift) {
  return pr.sign * (pr.c + static_cast<double>(shift)) / pr.w;
}

std::optional<Rational> exact_location_of(const Progression& pr, long long shift) {
  if (!pr.exact()) return std::nullopt;
  Rational r = (*pr.c_re_exact + Rational(shift)) / *pr.w_exact;
  return pr.sign < 0 ? Rational(-r) : r;
}

double loc_tol(cplx x, cplx y) { return 1e-12 * (1.0 + std::max(std::abs(x), std::abs(y))); }

Pole singleton(const Progression& pr, PoleFamily family, std::size_t index, long long shift) {
  Pole p;
  p.location = location_of(pr, shift);
  p.family = family;
  p.members.push_back({index, shift});
  p.exact_re = exact_location_of(pr, shift);
  return p;
}

bool pole_less(const Pole& x, const Pole& y) {
  // summation order: LowerB by descending Re(location), UpperA by ascending
  bool lower = x.family == PoleFamily::LowerB;
  if (x.exact_re && y.exact_re && *x.exact_re != *y.exact_re)
    return lower ? *x.exact_re > *y.exact_re : *x.exact_re < *y.exact_re;
  if (!(x.exact_re && y.exact_re) && x.location.real() != y.location.real())
    return lower ? x.location.real() > y.location.real() : x.location.real() < y.location.real();
  return x.location.imag() < y.location.imag();
}

std::string describe(PoleFamily family, const PoleMember& m) {
  return std::string(family == PoleFamily::LowerB ? "b" : "a") + "[" + std::to_string(m.index) + "] shift " +
         std::to_string(m.shift);
}

std::string fmt_loc(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g)", z.real(), z.imag());
  return buf;
}

}  // namespace

std::string_view to_string(PoleFamily family) noexcept {
  return family == PoleFamily::LowerB ? "lower_b" : "upper_a";
}

cplx member_location(const HParams& params, PoleFamily family, const PoleMember& member) {
  return location_of(progressions(params, family).at(member.index), member.shift);
}

std::optional<Rational> member_location_exact(const HParams& params, PoleFamily family, const PoleMember& member) {
  return exact_location_of(progressions(params, family).at(member.index), member.shift);
}

bool same_location(cplx x, const std::optional<Rational>& x_exact, cplx y, const std::optional<Rational>& y_exact) {
  double tol = loc_tol(x, y);
  if (x_exact && y_exact) return *x_exact == *y_exact && std::fabs(x.imag() - y.imag()) <= tol;
  return std::abs(x - y) <= tol;
}

std::vector<Pole> enumerate_poles(const HParams& params, PoleFamily family, long long max_shift) {
  std::vector<Pole> out;
  auto prs = progressions(params, family);
  for (std::size_t idx = 0; idx < prs.size(); ++idx)
    for (long long s = 0; s <= max_shift; ++s) out.push_back(singleton(prs[idx], family, idx, s));
  return out;
}

std::vector<Pole> group_poles(std::vector<Pole> singles) {
  if (singles.empty()) return {};
  bool exact = std::all_of(singles.begin(), singles.end(), [](const Pole& p) { return p.exact_re.has_value(); });
  std::vector<std::size_t> parent(singles.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::vector<std::size_t> order(singles.size());
  std::iota(order.begin(), order.end(), 0);
  if (exact) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (*singles[a].exact_re != *singles[b].exact_re) return *singles[a].exact_re < *singles[b].exact_re;
      return singles[a].location.imag() < singles[b].location.imag();
    });
    for (std::size_t t = 1; t < order.size(); ++t) {
      const Pole& x = singles[order[t - 1]];
      const Pole& y = singles[order[t]];
      if (same_location(x.location, x.exact_re, y.location, y.exact_re)) parent[find(order[t])] = find(order[t - 1]);
    }
  } else {
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return singles[a].location.real() < singles[b].location.real(); });
    for (std::size_t t = 0; t < order.size(); ++t) {
      const Pole& x = singles[order[t]];
      for (std::size_t u = t + 1; u < order.size(); ++u) {
        const Pole& y = singles[order[u]];
        if (y.location.real() - x.location.real() > loc_tol(x.location, y.location)) break;
        if (same_location(x.location, std::nullopt, y.location, std::nullopt)) parent[find(order[u])] = find(order[t]);
      }
    }
  }
  std::vector<std::vector<std::size_t>> buckets(singles.size());
  for (std::size_t i = 0; i < singles.size(); ++i) buckets[find(i)].push_back(i);
  std::vector<Pole> out;
  for (auto& b : buckets) {
    if (b.empty()) continue;
    std::vector<PoleMember> members;
    for (auto i : b) members.push_back(singles[i].members.front());
    std::sort(members.begin(), members.end(), [](const PoleMember& x, const PoleMember& y) {
      return x.index != y.index ? x.index < y.index : x.shift < y.shift;
    });
    // representative: the member with the smallest (index, shift)
    std::size_t rep = b.front();
    for (auto i : b)
      if (singles[i].members.front() == members.front()) rep = i;
    Pole g = singles[rep];
    g.members = std::move(members);
    if (!exact) g.exact_re.reset();
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), pole_less);
  return out;
}

SeparationReport check_separation(const HParams& params) {
  SeparationReport rep;
  if (params.m() == 0 || params.n() == 0) return rep;
  auto lo = progressions(params, PoleFamily::LowerB);
  auto up = progressions(params, PoleFamily::UpperA);
  // lower locations have Re <= lmax, upper ones have Re >= umin; only the overlap can collide
  double lmax = -INFINITY, umin = INFINITY;
  for (auto& p : lo) lmax = std::max(lmax, -p.c.real() / p.w);
  for (auto& p : up) umin = std::min(umin, p.c.real() / p.w);
  double tol = 1e-9 * (1.0 + std::max(std::fabs(lmax), std::fabs(umin)));
  if (lmax < umin - tol) return rep;

  constexpr long long kBudget = 200000;
  std::vector<Pole> cands;
  for (std::size_t j = 0; j < lo.size(); ++j) {
    double top = std::floor(-lo[j].c.real() - lo[j].w * (umin - tol));
    long long last = static_cast<long long>(std::min<double>(top, kBudget));
    if (top > kBudget) rep.exhaustive = false;
    for (long long l = 0; l <= last; ++l) cands.push_back(singleton(lo[j], PoleFamily::LowerB, j, l));
  }
  for (std::size_t i = 0; i < up.size(); ++i) {
    double top = std::floor(up[i].w * (lmax + tol) - up[i].c.real());
    long long last = static_cast<long long>(std::min<double>(top, kBudget));
    if (top > kBudget) rep.exhaustive = false;
    for (long long k = 0; k <= last; ++k) cands.push_back(singleton(up[i], PoleFamily::UpperA, i, k));
  }
  std::sort(cands.begin(), cands.end(),
            [](const Pole& x, const Pole& y) { return x.location.real() < y.location.real(); });
  for (std::size_t t = 0; t < cands.size(); ++t) {
    for (std::size_t u = t + 1; u < cands.size(); ++u) {
      const Pole& x = cands[t];
      const Pole& y = cands[u];
      if (y.location.real() - x.location.real() > 1e-9 * (1.0 + std::abs(x.location))) break;
      if (x.family == y.family) continue;
      if (same_location(x.location, x.exact_re, y.location, y.exact_re)) {
        rep.ok = false;
        rep.conflict = describe(x.family, x.members.front()) + " and " + describe(y.family, y.members.front()) +
                       " coincide at " + fmt_loc(x.location);
        return rep;
      }
    }
  }
  return rep;
}

namespace {

struct SimplicityVerdict {
  bool simple = true;
  bool exhaustive = true;
};

// Two progressions (c_i + k)/w_i and (c_j + l)/w_j meet for some k, l >= 0 iff the
// imaginary parts agree and, with w_i/w_j = P/Q in lowest terms, Q (r c_j - c_i) is an integer.
SimplicityVerdict exact_simplicity(const std::vector<Progression>& prs) {
  SimplicityVerdict v;
  for (std::size_t i = 0; i < prs.size(); ++i) {
    for (std::size_t j = i + 1; j < prs.size(); ++j) {
      double yi = prs[i].c.imag() / prs[i].w, yj = prs[j].c.imag() / prs[j].w;
      if (std::fabs(yi - yj) > 1e-12 * (1.0 + std::max(std::fabs(yi), std::fabs(yj)))) continue;
      Rational r = *prs[i].w_exact / *prs[j].w_exact;
      Rational cc = r * *prs[j].c_re_exact - *prs[i].c_re_exact;
      if (is_integer(Rational(cc * boost::multiprecision::denominator(r)))) {
        v.simple = false;
        return v;
      }
    }
  }
  return v;
}

}  // namespace

PoleStructure analyze_pole_structure(const HParams& params, long long max_shift) {
  PoleStructure ps;
  ps.max_shift = max_shift;
  ps.lower_poles = group_poles(enumerate_poles(params, PoleFamily::LowerB, max_shift));
  ps.upper_poles = group_poles(enumerate_poles(params, PoleFamily::UpperA, max_shift));

  auto sep = check_separation(params);
  ps.separation_ok = sep.ok;
  ps.separation_exhaustive = sep.exhaustive;
  if (!sep.ok) ps.diagnostics.push_back("separation violated: " + sep.conflict);
  if (!sep.exhaustive) ps.diagnostics.push_back("separation checked over a truncated shift window");

  auto family_flags = [&](PoleFamily family, const std::vector<Pole>& groups, bool& simple, bool& exhaustive) {
    auto prs = progressions(params, family);
    bool all_exact = std::all_of(prs.begin(), prs.end(), [](const Progression& p) { return p.exact(); });
    if (all_exact) {
      auto v = exact_simplicity(prs);
      simple = v.simple;
      exhaustive = true;
    } else {
      simple = std::all_of(groups.begin(), groups.end(), [](const Pole& g) { return g.order() == 1; });
      exhaustive = prs.size() <= 1;
      if (!exhaustive)
        ps.diagnostics.push_back(std::string(to_string(family)) + " simplicity decided up to shift " +
                                 std::to_string(max_shift) + " only (no exact rational data)");
    }
  };
  family_flags(PoleFamily::LowerB, ps.lower_poles, ps.lower_all_simple, ps.lower_simple_exhaustive);
  family_flags(PoleFamily::UpperA, ps.upper_poles, ps.upper_all_simple, ps.upper_simple_exhaustive);

  auto lo = progressions(params, PoleFamily::LowerB);
  auto up = progressions(params, PoleFamily::UpperA);
  ps.lower_complete_power = INFINITY;
  for (auto& p : lo) ps.lower_complete_power = std::min(ps.lower_complete_power, (p.c.real() + max_shift) / p.w);
  ps.upper_complete_power = -INFINITY;
  for (auto& p : up) ps.upper_complete_power = std::max(ps.upper_complete_power, -(p.c.real() + max_shift) / p.w);
  return ps;
}

GroupedPoles complete_pole_groups(const HParams& params, PoleFamily family, long long max_shift) {
  GroupedPoles out;
  auto prs = progressions(params, family);
  bool lower = family == PoleFamily::LowerB;
  out.complete_power = lower ? INFINITY : -INFINITY;
  for (auto& p : prs) {
    double b = (p.c.real() + static_cast<double>(max_shift)) / p.w;
    out.complete_power = lower ? std::min(out.complete_power, b) : std::max(out.complete_power, -b);
  }
  auto groups = group_poles(enumerate_poles(params, family, max_shift));
  double slack = 1e-12 * (1.0 + std::fabs(out.complete_power));
  for (auto& g : groups) {
    double pw = g.power().real();
    if (lower ? pw <= out.complete_power + slack : pw >= out.complete_power - slack) out.groups.push_back(std::move(g));
  }
  return out;
}

std::vector<PoleMember> members_at(const HParams& params, PoleFamily family, cplx location,
                                   const std::optional<Rational>& exact_re) {
  std::vector<PoleMember> out;
  auto prs = progressions(params, family);
  for (std::size_t idx = 0; idx < prs.size(); ++idx) {
    const auto& pr = prs[idx];
    double est = (pr.sign * location * pr.w - pr.c).real();
    if (!std::isfinite(est) || est < -0.5 || est > 9e15) continue;
    long long s = std::llround(est);
    if (same_location(location_of(pr, s), exact_location_of(pr, s), location, exact_re)) out.push_back({idx, s});
  }
  return out;
}

std::vector<Pole> poles_within(const HParams& params, cplx center, double radius) {
  std::vector<Pole> out;
  for (auto family : {PoleFamily::LowerB, PoleFamily::UpperA}) {
    auto prs = progressions(params, family);
    for (std::size_t idx = 0; idx < prs.size(); ++idx) {
      const auto& pr = prs[idx];
      double e1 = pr.sign * (center.real() - radius) * pr.w - pr.c.real();
      double e2 = pr.sign * (center.real() + radius) * pr.w - pr.c.real();
      double lo = std::max(0.0, std::ceil(std::min(e1, e2) - 1e-9));
      double hi = std::floor(std::max(e1, e2) + 1e-9);
      for (double s = lo; s <= hi && s - lo < 1e6; s += 1.0) {
        auto sh = static_cast<long long>(s);
        if (std::abs(location_of(pr, sh) - center) <= radius) out.push_back(singleton(pr, family, idx, sh));
      }
    }
  }
  return out;
}

}  // namespace foxh
