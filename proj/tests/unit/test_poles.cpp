#include <gtest/gtest.h>

#include <algorithm>

#include "foxh/poles.hpp"
#include "oracles.hpp"

using namespace foxh;
using foxh::testing::make_params;

namespace {

std::vector<double> real_locations(const std::vector<Pole>& poles) {
  std::vector<double> out;
  for (const auto& p : poles) out.push_back(p.location.real());
  return out;
}

}  // namespace

TEST(Poles, EnumerateLowerFamily) {
  auto poles = enumerate_poles(make_params(1, 0, {}, {{0.0, 1.0}}), PoleFamily::LowerB, 2);
  EXPECT_EQ(real_locations(poles), (std::vector<double>{0.0, -1.0, -2.0}));
  EXPECT_EQ(poles[2].members[0], (PoleMember{0, 2}));
  EXPECT_EQ(poles[1].power(), cplx(1.0));
}

TEST(Poles, EnumerateUpperFamily) {
  auto poles = enumerate_poles(make_params(0, 1, {{1.0, 1.0}}, {}), PoleFamily::UpperA, 1);
  EXPECT_EQ(real_locations(poles), (std::vector<double>{0.0, 1.0}));
}

TEST(Poles, EmptyFamily) {
  EXPECT_TRUE(enumerate_poles(make_params(0, 0, {}, {{0.0, 1.0}}), PoleFamily::LowerB, 5).empty());
}

TEST(Poles, WeightedLocation) {
  auto p = make_params(1, 1, {{cplx(0.5, 1.0), 2.0}}, {{cplx(0.25, -0.5), 0.5}});
  auto b = member_location(p, PoleFamily::LowerB, {0, 3});
  EXPECT_NEAR(b.real(), -(0.25 + 3) / 0.5, 1e-15);
  EXPECT_NEAR(b.imag(), 1.0, 1e-15);
  auto a = member_location(p, PoleFamily::UpperA, {0, 2});
  EXPECT_NEAR(a.real(), (1 - 0.5 + 2) / 2.0, 1e-15);
  EXPECT_NEAR(a.imag(), -0.5, 1e-15);
  EXPECT_EQ(*member_location_exact(p, PoleFamily::LowerB, {0, 3}), Rational(-13, 2));
}

TEST(Poles, IdenticalPairsGiveDoublePoles) {
  auto ps = analyze_pole_structure(make_params(2, 0, {}, {{0.0, 1.0}, {0.0, 1.0}}), 10);
  EXPECT_FALSE(ps.lower_all_simple);
  ASSERT_EQ(ps.lower_poles.size(), 11u);
  for (const auto& g : ps.lower_poles) EXPECT_EQ(g.order(), 2u);
  EXPECT_TRUE(ps.lower_simple_exhaustive);
}

TEST(Poles, HalfOffsetPairsStaySimple) {
  auto p = make_params(2, 0, {}, {{0.0, 1.0}, {0.5, 1.0}});
  auto ps = analyze_pole_structure(p, 20);
  EXPECT_TRUE(ps.lower_all_simple);
  EXPECT_EQ(ps.lower_poles.size(), 42u);
  auto brute = foxh::testing::brute_force_multiplicities(p, true, 20);
  EXPECT_TRUE(std::all_of(brute.begin(), brute.end(), [](int k) { return k == 1; }));
  auto locs = real_locations(ps.lower_poles);
  EXPECT_TRUE(std::is_sorted(locs.rbegin(), locs.rend()));
  EXPECT_DOUBLE_EQ(locs[1], -0.5);
}

TEST(Poles, SeparationViolation) {
  auto p = make_params(1, 1, {{1.0, 1.0}}, {{0.0, 1.0}});
  auto ps = analyze_pole_structure(p, 4);
  EXPECT_FALSE(ps.separation_ok);
  auto rep = check_separation(p);
  EXPECT_FALSE(rep.ok);
  EXPECT_TRUE(rep.exhaustive);
  EXPECT_FALSE(rep.conflict.empty());
}

TEST(Poles, SeparationFarBeyondHorizon) {
  // b-poles -(b + l)/2 and a-poles (1 - a + k) meet only at large shifts
  auto p = make_params(1, 1, {{101.0, 1.0}}, {{0.0, 2.0}});
  EXPECT_FALSE(check_separation(p).ok);
  EXPECT_FALSE(analyze_pole_structure(p, 4).separation_ok);
}

TEST(Poles, CoincidenceAcrossWeights) {
  // -(1/2 + l) and -(0 + l')/2 coincide whenever l' = 2l + 1
  auto p = make_params(2, 0, {}, {{0.5, 1.0}, {0.0, 2.0}});
  auto ps = analyze_pole_structure(p, 6);
  EXPECT_FALSE(ps.lower_all_simple);
  auto brute = foxh::testing::brute_force_multiplicities(p, true, 6);
  EXPECT_EQ(brute[0], 2);  // -1/2 from both progressions
  auto grouped = complete_pole_groups(p, PoleFamily::LowerB, 6);
  for (const auto& g : grouped.groups) {
    if (std::fabs(g.location.real() + 0.5) < 1e-14) EXPECT_EQ(g.order(), 2u);
    if (g.location.real() == 0.0) EXPECT_EQ(g.order(), 1u);
  }
}

TEST(Poles, FloatPolicyMatchesExact) {
  auto p = make_params(3, 1, {{0.3, 0.5}}, {{0.1, 1.0}, {0.6, 0.5}, {0.35, 0.25}});
  auto exact = analyze_pole_structure(p, 16);
  auto flt = analyze_pole_structure(p.without_exact_data(), 16);
  ASSERT_EQ(exact.lower_poles.size(), flt.lower_poles.size());
  for (std::size_t g = 0; g < exact.lower_poles.size(); ++g)
    EXPECT_EQ(exact.lower_poles[g].order(), flt.lower_poles[g].order());
  EXPECT_EQ(exact.lower_all_simple, flt.lower_all_simple);
  EXPECT_TRUE(exact.lower_simple_exhaustive);
}

TEST(Poles, GroupOrderMatchesBruteForce) {
  auto p = make_params(3, 2, {{0.0, 1.0}, {0.0, 0.5}}, {{0.0, 1.0}, {1.0, 1.0}, {0.0, 0.5}});
  const long long L = 12;
  auto brute = foxh::testing::brute_force_multiplicities(p, true, L);
  auto singles = enumerate_poles(p, PoleFamily::LowerB, L);
  auto groups = group_poles(singles);
  ASSERT_EQ(brute.size(), singles.size());
  for (std::size_t x = 0; x < singles.size(); ++x) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Pole& g) {
      return std::find(g.members.begin(), g.members.end(), singles[x].members[0]) != g.members.end();
    });
    ASSERT_NE(it, groups.end());
    EXPECT_EQ(static_cast<int>(it->order()), brute[x]);
  }
}

TEST(Poles, MembersAtCoversAllShifts) {
  auto p = make_params(2, 0, {}, {{0.0, 1.0}, {0.0, 0.5}});
  auto members = members_at(p, PoleFamily::LowerB, cplx(-4.0));
  EXPECT_EQ(members.size(), 2u);
  EXPECT_TRUE(members_at(p, PoleFamily::LowerB, cplx(0.25)).empty());
}

TEST(Poles, PolesWithinRadius) {
  auto p = make_params(1, 1, {{0.5, 1.0}}, {{0.0, 1.0}});
  auto near = poles_within(p, cplx(0.1), 0.6);
  EXPECT_EQ(near.size(), 2u);  // b-pole 0 and a-pole 1/2
}
