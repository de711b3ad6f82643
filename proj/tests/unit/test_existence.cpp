#include <gtest/gtest.h>

#include "foxh/errors.hpp"
#include "foxh/existence.hpp"
#include "oracles.hpp"

using namespace foxh;
using foxh::testing::make_params;

namespace {

HParams gamma_squared() { return make_params(2, 0, {}, {{0.0, 1.0}, {0.0, 1.0}}); }
HParams balanced(double a) { return make_params(1, 0, {{a, 2.0}}, {{0.0, 2.0}}); }
HParams mirror_exp() { return make_params(0, 1, {{1.0, 1.0}}, {}); }

}  // namespace

TEST(Existence, DeltaPositiveLeftLoop) {
  auto v = classify_existence(gamma_squared(), 1.0, Contour::LeftLoop);
  EXPECT_TRUE(v.exists);
  EXPECT_EQ(v.case_tag, ExistenceCase::LeftDeltaPositive);
  EXPECT_EQ(v.contour, Contour::LeftLoop);
  EXPECT_FALSE(v.boundary_case);
}

TEST(Existence, DeltaPositiveRejectsRightLoop) {
  auto v = classify_existence(gamma_squared(), 1.0, Contour::RightLoop);
  EXPECT_FALSE(v.exists);
  EXPECT_EQ(v.case_tag, ExistenceCase::None);
}

TEST(Existence, BalancedInsideDisk) {
  auto v = classify_existence(balanced(1.0), 0.5, Contour::LeftLoop);
  EXPECT_TRUE(v.exists);
  EXPECT_EQ(v.case_tag, ExistenceCase::LeftDeltaZeroInside);
  EXPECT_FALSE(classify_existence(balanced(1.0), 0.5, Contour::RightLoop).exists);
}

TEST(Existence, BalancedOutsideDisk) {
  auto v = classify_existence(balanced(1.0), cplx(0.0, 3.0));
  EXPECT_TRUE(v.exists);
  EXPECT_EQ(v.contour, Contour::RightLoop);
  EXPECT_EQ(v.case_tag, ExistenceCase::RightDeltaZeroOutside);
}

TEST(Existence, BoundaryRequiresMuBelowMinusOne) {
  auto v = classify_existence(balanced(1.0), 1.0);
  EXPECT_FALSE(v.exists);
  EXPECT_TRUE(v.boundary_case);
  auto w = classify_existence(balanced(1.5), cplx(0.0, 1.0));
  EXPECT_TRUE(w.exists);
  EXPECT_TRUE(w.boundary_case);
  EXPECT_EQ(w.contour, Contour::Either);
  EXPECT_EQ(classify_existence(balanced(1.5), -1.0, Contour::LeftLoop).case_tag, ExistenceCase::LeftDeltaZeroBoundary);
  EXPECT_EQ(classify_existence(balanced(1.5), -1.0, Contour::RightLoop).case_tag, ExistenceCase::RightDeltaZeroBoundary);
}

TEST(Existence, DeltaNegativeRightLoop) {
  auto v = classify_existence(mirror_exp(), cplx(2.0, -1.0));
  EXPECT_TRUE(v.exists);
  EXPECT_EQ(v.contour, Contour::RightLoop);
  EXPECT_EQ(v.case_tag, ExistenceCase::RightDeltaNegative);
}

TEST(Existence, ZeroArgument) {
  EXPECT_THROW(classify_existence(gamma_squared(), 0.0), Error);
  auto v = classify_existence(gamma_squared(), 0.0, std::nullopt, ZeroPolicy::ReportNonExistent);
  EXPECT_FALSE(v.exists);
  EXPECT_EQ(v.contour, Contour::None);
}

TEST(Existence, BoundaryToleranceIsRelative) {
  auto inv = compute_invariants(balanced(1.5));
  EXPECT_TRUE(classify_existence(inv, 1.0 + 1e-14).boundary_case);
  EXPECT_FALSE(classify_existence(inv, 1.0 + 1e-9).boundary_case);
}

TEST(Existence, InvalidRequestedContour) {
  EXPECT_THROW(classify_existence(gamma_squared(), 1.0, Contour::Either), Error);
}

TEST(Existence, StringForms) {
  EXPECT_EQ(to_string(Contour::LeftLoop), "left_loop");
  EXPECT_EQ(to_string(ExistenceCase::RightDeltaZeroBoundary), "right_delta_zero_boundary");
}
