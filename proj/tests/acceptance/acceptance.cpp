// Acceptance checks: one PASS/FAIL line per criterion.
//   foxh_acceptance [--criterion N]
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include "foxh/errors.hpp"
#include "foxh/existence.hpp"
#include "foxh/gamma.hpp"
#include "foxh/oracle.hpp"
#include "foxh/reductions.hpp"
#include "foxh/script_h.hpp"
#include "foxh/series.hpp"
#include "oracles.hpp"

using namespace foxh;
using foxh::testing::make_params;
using foxh::testing::Pair;
using foxh::testing::rel_err;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

ContourSpec vertical(double sigma) {
  ContourSpec c;
  c.kind = ContourKind::VerticalLine;
  c.sigma0 = sigma;
  return c;
}

// 2 K_0(2 sqrt z) from K_0(x) = int_0^inf exp(-x cosh t) dt, complex x with Re x > 0.
cplx two_k0_of_two_sqrt(cplx z) {
  cplx x = 2.0 * std::sqrt(z);
  boost::math::quadrature::exp_sinh<double> integrator;
  auto re = integrator.integrate([&](double t) { return std::exp(-x * std::cosh(t)).real(); }, 0.0,
                                 std::numeric_limits<double>::infinity());
  auto im = integrator.integrate([&](double t) { return std::exp(-x * std::cosh(t)).imag(); }, 0.0,
                                 std::numeric_limits<double>::infinity());
  return 2.0 * cplx(re, im);
}

// 1. e^{-z}
void criterion_1(Outcome& o) {
  auto p = make_params(1, 0, {}, {{0.0, 1.0}});
  auto t0 = Clock::now();
  double worst = 0;
  for (int k = 0; k < 20; ++k) {
    double r = 0.25 + 4.75 * k / 19.0;
    double theta = -std::numbers::pi + 2 * std::numbers::pi * (k + 0.5) / 20.0;
    cplx z = std::polar(r, theta);
    double e = rel_err(evaluate(p, z).value, std::exp(-z));
    worst = std::max(worst, e);
  }
  double secs = seconds_since(t0);
  o.require(worst <= 1e-10, "relative error " + sci(worst));
  o.require(secs < 1.0, "runtime " + sci(secs) + " s");
  o.detail << "20 points |z|<=5, max rel err " << sci(worst) << ", " << sci(secs) << " s";
}

// 2. Gamma(s)^2 against the integral representation of K_0
void criterion_2(Outcome& o) {
  auto p = make_params(2, 0, {}, {{0.0, 1.0}, {0.0, 1.0}});
  auto t0 = Clock::now();
  double worst = 0, boost_gap = 0;
  for (double z : {0.04, 0.25, 1.0, 4.0}) {
    cplx ref = two_k0_of_two_sqrt(z);
    worst = std::max(worst, rel_err(evaluate(p, z).value, ref));
    boost_gap = std::max(boost_gap, rel_err(ref, 2 * boost::math::cyl_bessel_k(0, 2 * std::sqrt(z))));
  }
  double secs = seconds_since(t0);
  o.require(worst <= 1e-8, "relative error " + sci(worst));
  o.require(secs < 2.0, "runtime " + sci(secs) + " s");
  o.detail << "max rel err " << sci(worst) << " (oracle vs boost K0 " << sci(boost_gap) << "), " << sci(secs) << " s";
}

// 3. order-one log coefficients reduce to the simple-pole formula
void criterion_3(Outcome& o) {
  std::mt19937_64 rng(31415);
  int sets = 0, checks = 0;
  double worst = 0;
  for (; sets < 64; ++sets) {
    auto p = foxh::testing::random_simple_params(rng);
    for (auto family : {PoleFamily::LowerB, PoleFamily::UpperA}) {
      for (const auto& g : complete_pole_groups(p, family, 5).groups) {
        const auto& mem = g.members.front();
        if (mem.shift > 5) continue;
        o.require(g.order() == 1, "non-simple group in a simple set");
        cplx simple = family == PoleFamily::LowerB ? coeff_simple_b(p, mem.index, mem.shift)
                                                   : coeff_simple_a(p, mem.index, mem.shift);
        cplx log = family == PoleFamily::LowerB ? coeff_log_b(p, g)[0] : coeff_log_a(p, g)[0];
        double e = simple == 0.0 ? std::abs(log) : rel_err(log, simple);
        worst = std::max(worst, e);
        ++checks;
      }
    }
  }
  o.require(worst <= 1e-12, "relative error " + sci(worst));
  o.detail << sets << " random sets, " << checks << " coefficients, max rel err " << sci(worst);
}

// 4. coefficient formulas against circle integrals
void criterion_4(Outcome& o) {
  struct Set {
    const char* name;
    HParams params;
    PoleFamily family;
    std::vector<double> locations;
    std::size_t order;
  };
  std::vector<Set> sets = {
      {"lower simple", make_params(2, 1, {{0.3, 1.0}, {0.2, 0.5}}, {{0.25, 1.5}, {0.1, 1.0}, {0.4, 2.0}}),
       PoleFamily::LowerB, {-0.25 / 1.5, -2.25 / 1.5}, 1},
      {"lower double", make_params(2, 0, {{0.4, 1.0}}, {{0.0, 1.0}, {0.0, 1.0}, {0.3, 0.5}}), PoleFamily::LowerB,
       {0.0, -2.0}, 2},
      {"lower triple", make_params(3, 1, {{0.5, 1.0}}, {{0.0, 1.0}, {0.0, 1.0}, {0.0, 0.5}}), PoleFamily::LowerB,
       {0.0, -2.0}, 3},
      {"upper simple", make_params(1, 1, {{0.6, 1.0}, {0.2, 2.0}}, {{0.0, 1.0}}), PoleFamily::UpperA, {0.4, 2.4}, 1},
      {"upper double", make_params(0, 2, {{1.0, 1.0}, {1.0, 1.0}, {0.5, 1.5}}, {{0.25, 1.0}}), PoleFamily::UpperA,
       {0.0, 2.0}, 2},
      {"upper triple", make_params(0, 3, {{1.0, 1.0}, {1.0, 1.0}, {1.0, 0.5}}, {{0.5, 1.0}}), PoleFamily::UpperA,
       {0.0, 2.0}, 3},
  };
  double worst = 0;
  int checks = 0;
  for (const auto& s : sets) {
    auto groups = complete_pole_groups(s.params, s.family, 6).groups;
    for (double loc : s.locations) {
      const Pole* g = nullptr;
      for (const auto& c : groups)
        if (std::abs(c.location - cplx(loc)) < 1e-12) g = &c;
      if (!g) {
        o.require(false, std::string(s.name) + ": no group at " + std::to_string(loc));
        continue;
      }
      o.require(g->order() == s.order, std::string(s.name) + ": order " + std::to_string(g->order()));
      auto coeffs = s.family == PoleFamily::LowerB ? coeff_log_b(s.params, *g) : coeff_log_a(s.params, *g);
      double sign = s.family == PoleFamily::LowerB ? 1.0 : -1.0;
      for (cplx z : {cplx(0.7, 0.0), cplx(1.9, 0.6)}) {
        cplx series = 0, lz = std::log(z);
        for (std::size_t i = 0; i < coeffs.size(); ++i) series += coeffs[i] * std::pow(lz, double(i));
        series *= std::pow(z, g->power());
        cplx residue = residue_check(s.params, g->location, 0.0, z);
        double e = rel_err(sign * residue, series);
        worst = std::max(worst, e);
        ++checks;
        o.require(e <= 1e-8, std::string(s.name) + " rel err " + sci(e));
      }
    }
  }
  o.detail << "6 sets, " << checks << " residues, max rel err " << sci(worst);
}

// 5. series against vertical-line quadrature, and contour independence
void criterion_5(Outcome& o) {
  struct Set {
    const char* id;
    double sigma_a, sigma_b;
    std::vector<cplx> zs;
  };
  std::vector<Set> sets = {
      {"exp", 0.5, 2.0, {0.3, 1.0, 2.5, {1.0, 1.0}, {0.5, -0.8}}},
      {"bessel_k", 0.5, 1.5, {0.04, 0.6, 3.0, {-1.0, 0.5}, {0.2, -2.0}}},
      {"power_exp_complex", 0.0, 1.0, {0.4, 1.5, {0.8, 0.8}, {2.0, -0.5}, 4.0}},
      {"geometric", 0.3, 0.7, {0.25, 0.5, {0.3, 0.4}, 2.0, {-0.5, 3.0}}},
  };
  double worst_series = 0, worst_contour = 0;
  for (const auto& s : sets) {
    const auto& kc = known_case(s.id);
    o.require(compute_invariants(kc.params).a_star > 0, std::string(s.id) + " a_star");
    for (cplx z : s.zs) {
      auto qa = quadrature_eval(kc.params, z, vertical(s.sigma_a));
      auto qb = quadrature_eval(kc.params, z, vertical(s.sigma_b));
      auto ev = evaluate(kc.params, z);
      double es = rel_err(ev.value, qa.value), ec = rel_err(qa.value, qb.value);
      worst_series = std::max(worst_series, es);
      worst_contour = std::max(worst_contour, ec);
    }
  }
  o.require(worst_series <= 1e-6, "series vs quadrature " + sci(worst_series));
  o.require(worst_contour <= 1e-7, "contour vs contour " + sci(worst_contour));
  o.detail << "4 sets x 5 points, series/quadrature " << sci(worst_series) << ", two contours " << sci(worst_contour);
}

// 6. vertical Gamma modulus estimate
void criterion_6(Outcome& o) {
  const double x = 0.7;
  bool band = true, uncorrected_fails = true;
  std::ostringstream d;
  for (auto [y, tol] : {std::pair{50.0, 0.01}, std::pair{500.0, 0.001}}) {
    for (double sy : {y, -y}) {
      double log_abs = log_gamma(cplx(x, sy)).real();
      double ratio = std::exp(log_abs - log_gamma_abs_estimate(x, sy, GammaAxis::VerticalLimit));
      // the form with e^{-x} retained: sqrt(2 pi) |y|^{x-1/2} e^{-x - pi|y|/2}
      double with_exp = 0.5 * std::log(2 * std::numbers::pi) + (x - 0.5) * std::log(y) - x - std::numbers::pi * y / 2;
      double without_exp = with_exp + x;
      double ratio_with = std::exp(log_abs - with_exp), ratio_without = std::exp(log_abs - without_exp);
      band &= std::fabs(ratio - 1) <= tol;
      // "uncorrected (missing e^x)": the formula without the e^{x} factor is expected to miss the band
      uncorrected_fails &= std::fabs(ratio_without - 1) > tol;
      if (sy > 0)
        d << "|y|=" << y << ": estimate " << ratio << ", with e^-x " << ratio_with << ", without e^-x " << ratio_without
          << "; ";
    }
  }
  o.require(band, "implemented estimate outside band");
  o.require(uncorrected_fails,
            "the formula without e^{-x} is the one inside the band; the e^{-x} form misses it by e^{0.7}");
  o.detail << d.str();
}

// 7. script_h growth estimates on horizontal lines
void criterion_7(Outcome& o) {
  struct Set {
    const char* name;
    HParams params;
    double sigma;
  };
  std::vector<Set> sets = {
      {"gamma", make_params(1, 0, {}, {{0.0, 1.0}}), 1.5},
      {"gamma^2", make_params(2, 0, {}, {{0.0, 1.0}, {0.0, 1.0}}), 1.5},
      {"mixed", make_params(1, 1, {{0.3, 0.5}, {0.2, 1.0}}, {{0.25, 1.5}, {-0.1, 1.0}}), 1.5},
  };
  double worst = 0;
  int checked = 0, skipped = 0;
  for (const auto& s : sets) {
    for (auto dir : {Direction::PlusInfinity, Direction::MinusInfinity}) {
      auto est = script_h_estimate(s.params, s.sigma, dir);
      if (!est.defined) {
        ++skipped;
        continue;
      }
      for (double t : {30.5, 40.5, 60.5}) {
        double st = dir == Direction::PlusInfinity ? t : -t;
        double ratio = std::exp(log_script_h(s.params, cplx(st, s.sigma)).real() - est.log_growth(t));
        worst = std::max(worst, std::fabs(ratio - 1));
        o.require(ratio >= 0.9 && ratio <= 1.1, std::string(s.name) + " t=" + std::to_string(st) + " ratio " + std::to_string(ratio));
        ++checked;
      }
    }
  }
  o.require(checked >= 12, "too few defined directions");
  o.detail << checked << " samples (" << skipped << " undefined directions skipped), max |ratio-1| " << sci(worst);
}

// 8. existence truth table
void criterion_8(Outcome& o) {
  auto positive = make_params(2, 0, {}, {{0.0, 1.0}, {0.0, 1.0}});
  auto negative = make_params(0, 1, {{1.0, 1.0}}, {});
  auto balanced_mu_m1 = make_params(1, 0, {{1.0, 2.0}}, {{0.0, 2.0}});
  auto balanced_mu_m15 = make_params(1, 0, {{1.5, 2.0}}, {{0.0, 2.0}});
  struct Row {
    const char* name;
    const HParams* params;
    cplx z;
    std::optional<Contour> contour;
    bool exists;
    ExistenceCase tag;
    bool boundary;
  };
  std::vector<Row> rows = {
      {"left, Delta>0", &positive, 1.0, Contour::LeftLoop, true, ExistenceCase::LeftDeltaPositive, false},
      {"left, Delta=0, |z|<delta", &balanced_mu_m1, 0.5, Contour::LeftLoop, true, ExistenceCase::LeftDeltaZeroInside, false},
      {"left, Delta=0, |z|=delta, Re mu<-1", &balanced_mu_m15, {0, 1}, Contour::LeftLoop, true,
       ExistenceCase::LeftDeltaZeroBoundary, true},
      {"right, Delta<0", &negative, {2, -1}, Contour::RightLoop, true, ExistenceCase::RightDeltaNegative, false},
      {"right, Delta=0, |z|>delta", &balanced_mu_m1, 3.0, Contour::RightLoop, true, ExistenceCase::RightDeltaZeroOutside, false},
      {"right, Delta=0, |z|=delta, Re mu<-1", &balanced_mu_m15, -1.0, Contour::RightLoop, true,
       ExistenceCase::RightDeltaZeroBoundary, true},
      {"boundary, Re mu=-1", &balanced_mu_m1, 1.0, std::nullopt, false, ExistenceCase::None, true},
      {"boundary, Re mu=-1, left", &balanced_mu_m1, 1.0, Contour::LeftLoop, false, ExistenceCase::None, true},
      {"left, Delta=0, |z|>delta", &balanced_mu_m1, 3.0, Contour::LeftLoop, false, ExistenceCase::None, false},
      {"right, Delta>0", &positive, 1.0, Contour::RightLoop, false, ExistenceCase::None, false},
      {"left, Delta<0", &negative, 1.0, Contour::LeftLoop, false, ExistenceCase::None, false},
      {"natural, Delta>0", &positive, {0.3, 4}, std::nullopt, true, ExistenceCase::LeftDeltaPositive, false},
      {"natural, boundary, Re mu<-1", &balanced_mu_m15, 1.0, std::nullopt, true, ExistenceCase::LeftDeltaZeroBoundary, true},
  };
  for (const auto& r : rows) {
    auto v = classify_existence(*r.params, r.z, r.contour);
    o.require(v.exists == r.exists && v.case_tag == r.tag && v.boundary_case == r.boundary, r.name);
  }
  o.detail << rows.size() << " rows";
}

// 9. leading terms confirmed by a two-point decay fit
void criterion_9(Outcome& o) {
  struct Set {
    const char* name;
    HParams params;
    Regime regime;
  };
  std::vector<Set> sets = {
      {"simple near zero", make_params(2, 0, {}, {{0.5, 1.0}, {2.0, 1.0}}), Regime::Zero},
      {"simple near infinity", make_params(0, 2, {{0.5, 1.0}, {-1.5, 2.0}}, {}), Regime::Infinity},
      {"coincident near zero", make_params(2, 0, {}, {{0.0, 1.0}, {0.0, 0.5}}), Regime::Zero},
      {"coincident near infinity", make_params(0, 2, {{1.0, 1.0}, {1.0, 1.0}}, {}), Regime::Infinity},
  };
  for (const auto& s : sets) {
    auto lt = leading_term(s.params, s.regime);
    auto radii = s.regime == Regime::Zero ? std::array{1e-3, 1e-4} : std::array{1e3, 1e4};
    auto fit = [&](int k) {
      std::array<double, 2> logs{};
      for (int t = 0; t < 2; ++t) {
        cplx z = std::polar(radii[t], 0.3);
        logs[t] = std::log(std::abs(evaluate(s.params, z).value / std::pow(std::log(z), double(k))));
      }
      return (logs[0] - logs[1]) / (std::log(radii[0]) - std::log(radii[1]));
    };
    double rho = lt.exponent.real();
    double est = fit(lt.log_power);
    o.require(std::fabs(est - rho) < 0.05, std::string(s.name) + " exponent fit " + std::to_string(est));
    if (lt.log_power > 0)
      o.require(std::fabs(fit(lt.log_power - 1) - rho) >= 0.05, std::string(s.name) + " lower log power also fits");
    o.require(std::fabs(fit(lt.log_power + 1) - rho) >= 0.05, std::string(s.name) + " higher log power also fits");
    cplx z = std::polar(radii[1], 0.3);
    cplx model = lt.coefficient * std::pow(z, lt.exponent) * std::pow(std::log(z), double(lt.log_power));
    double coef_gap = rel_err(evaluate(s.params, z).value, model);
    o.require(coef_gap < 0.25, std::string(s.name) + " coefficient gap " + sci(coef_gap));
    o.detail << s.name << ": rho=" << rho << " k=" << lt.log_power << " fit " << est << "; ";
  }
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

// 10. byte-identical CLI output over the corpus
void criterion_10(Outcome& o) {
#ifndef FOXH_CLI_PATH
  o.require(false, "built without the foxh tool");
#else
  std::vector<std::string> commands;
  for (const auto& kc : known_cases()) {
    std::string zs;
    for (const auto& rp : kc.reference_points) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "[%.17g,%.17g];", rp.z.real(), rp.z.imag());
      zs += buf;
    }
    std::string base = std::string(FOXH_CLI_PATH) + " %s --case " + kc.id;
    auto cmd = [&](const std::string& sub, const std::string& extra) {
      char buf[4096];
      std::snprintf(buf, sizeof buf, base.c_str(), sub.c_str());
      return std::string(buf) + extra + " 2>&1";
    };
    commands.push_back(cmd("eval", " --z '" + zs + "'"));
    commands.push_back(cmd("classify", " --verbose --abs --z '" + zs + "'"));
    commands.push_back(cmd("expand", " --leading --max-shift 8"));
  }
  commands.push_back(std::string(FOXH_CLI_PATH) + " selftest 2>&1");
  std::size_t bytes = 0;
  for (const auto& c : commands) {
    int s1 = 0, s2 = 0;
    std::string a = capture(c, s1), b = capture(c, s2);
    bytes += a.size();
    o.require(!a.empty() && a == b && s1 == s2, "output differs: " + c);
  }
  o.detail << commands.size() << " invocations run twice, " << bytes << " bytes compared";
#endif
}

const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> kCriteria = {
    {"exponential reduction", criterion_1},  {"power-log path", criterion_2},
    {"degeneracy", criterion_3},             {"residue-oracle equivalence", criterion_4},
    {"quadrature cross-check", criterion_5}, {"vertical Gamma estimate", criterion_6},
    {"script-H growth", criterion_7},        {"existence truth table", criterion_8},
    {"leading-term decay", criterion_9},     {"determinism", criterion_10},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int k = 1; k < argc; ++k)
    if (std::strcmp(argv[k], "--criterion") == 0 && k + 1 < argc) only = std::atoi(argv[++k]);
  int failed = 0;
  for (std::size_t c = 0; c < kCriteria.size(); ++c) {
    if (only && static_cast<int>(c) + 1 != only) continue;
    Outcome o;
    try {
      kCriteria[c].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %2zu %s  %s: %s\n", c + 1, o.pass ? "PASS" : "FAIL", kCriteria[c].first, o.detail.str().c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
