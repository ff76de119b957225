#include <gtest/gtest.h>

#include "rfvote/feasibility.hpp"
#include "support/fixtures.hpp"

namespace rfvote {
namespace {

TEST(ConstraintSystem, OrderingAndNames) {
  const auto p = testing::uniform(2);
  const auto general = constraint_system(System::General, p);
  ASSERT_EQ(general.size(), 6u);
  EXPECT_EQ(general[0].id.str(), "general.lower[0]");
  EXPECT_EQ(general[1].id.str(), "general.upper[0]");
  EXPECT_EQ(general[5].id.str(), "general.upper[2]");

  const auto mono = constraint_system(System::Monotone, p);
  ASSERT_EQ(mono.size(), 4u);
  EXPECT_EQ(mono.back().id.str(), "monotone.order");
}

TEST(ConstraintSystem, UpperN3UniformCoefficients) {
  // j=1: Q(b)/2 - Q(a) + 5/8 >= 0, i.e. 2Q(a) - Q(b) <= 5/4.
  const auto sys = constraint_system(System::General, testing::uniform(3));
  const auto& c = sys[3];
  ASSERT_EQ(c.id.str(), "general.upper[1]");
  EXPECT_EQ(c.coef_a, -1);
  EXPECT_EQ(c.coef_b, Rational(1, 2));
  EXPECT_EQ(c.constant, Rational(5, 8));
}

TEST(Check, MajorityIsFeasibleAndBinding) {
  const auto report = check_implementable({Rational(3, 4), Rational(1, 4)}, testing::uniform(3));
  EXPECT_TRUE(report.feasible);
  EXPECT_TRUE(report.violated().empty());
  ASSERT_EQ(report.binding.size(), 2u);
  EXPECT_EQ(report.binding[0].str(), "general.upper[1]");
  EXPECT_EQ(report.binding[1].str(), "general.upper[2]");
}

TEST(Check, ReportsAllViolations) {
  const auto report = check_monotone_implementable({1, 0}, testing::uniform(3));
  EXPECT_FALSE(report.feasible);
  const auto bad = report.violated();
  ASSERT_EQ(bad.size(), 2u);
  EXPECT_EQ(report.slack(bad[0]).slack, Rational(-3, 8));
  EXPECT_EQ(report.slacks.size(), 5u);
}

TEST(Check, MonotoneRejectsBelowDiagonal) {
  const ReducedForm q{Rational(1, 4), Rational(3, 4)};
  const auto p = testing::uniform(3);
  EXPECT_TRUE(check_implementable(q, p).feasible);
  EXPECT_FALSE(check_monotone_implementable(q, p).feasible);
}

TEST(Check, UnanimousExcludesConstants) {
  const auto p = testing::uniform(3);
  EXPECT_FALSE(check_u_implementable({1, 1}, p).feasible);
  EXPECT_FALSE(check_u_implementable({0, 0}, p).feasible);
  EXPECT_TRUE(check_u_implementable({Rational(1, 2), Rational(1, 2)}, p).feasible);
  EXPECT_TRUE(check_u_implementable({Rational(1, 4), 0}, p).feasible);
}

TEST(Check, UnknownSlackIdThrows) {
  const auto report = check_implementable({Rational(1, 2), Rational(1, 2)}, testing::uniform(3));
  EXPECT_ANY_THROW((void)report.slack(ConstraintId{System::Monotone, Family::Order, 0}));
}

}  // namespace
}  // namespace rfvote
