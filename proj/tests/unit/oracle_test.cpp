#include <gtest/gtest.h>

#include "rfvote/decomposition.hpp"
#include "rfvote/errors.hpp"
#include "rfvote/oracle.hpp"
#include "support/fixtures.hpp"

namespace rfvote {
namespace {

TEST(Enumerate, CountAndBitOrder) {
  const auto rules = oracle::enumerate_deterministic(3);
  ASSERT_EQ(rules.size(), 16u);
  EXPECT_EQ(rules[0], constant_rule(3, 0));
  EXPECT_EQ(rules[1], SymmetricRule({1, 0, 0, 0}));
  EXPECT_EQ(rules[15], constant_rule(3, 1));
  EXPECT_THROW(oracle::enumerate_deterministic(17), SizeError);
}

TEST(SupportMaximize, SpotDirections) {
  const auto p = testing::uniform(3);
  const auto east = oracle::support_maximize(p, {1, 0});
  EXPECT_EQ(east.rule, (QuotaRule{QuotaFamily::QualifiedMajority, 1}));
  EXPECT_EQ(east.value, 1);
  EXPECT_FALSE(east.degenerate);

  // Ties quota 2 and quota 3; both reach 1/4.
  const auto skew = oracle::support_maximize(p, {1, -2});
  EXPECT_EQ(skew.value, Rational(1, 4));
  EXPECT_EQ(skew.rule.family, QuotaFamily::QualifiedMajority);

  const auto west = oracle::support_maximize(p, {-1, 0});
  EXPECT_EQ(west.value, 0);
  EXPECT_TRUE(oracle::support_maximize(p, {0, 0}).degenerate);
}

TEST(SupportMaximize, MatchesExhaustiveSearch) {
  for (int n = 2; n <= 7; ++n) {
    const auto p = testing::endpoint_heavy(n);
    for (int a = -3; a <= 3; ++a) {
      for (int b = -3; b <= 3; ++b) {
        const oracle::SupportDirection d{a, b};
        const auto s = oracle::support_maximize(p, d);
        EXPECT_EQ(s.value, oracle::support_maximize_brute(p, d)) << "n=" << n << " d=(" << a << "," << b << ")";
        const auto q = reduced_form(to_rule(s.rule, n), p);
        EXPECT_EQ(d.mu_a * q.qa + d.mu_b * q.qb, s.value);
      }
    }
  }
}

TEST(VerifyProjection, SmallRunsAreClean) {
  for (int n = 2; n <= 5; ++n) {
    const auto r = oracle::verify_projection(testing::endpoint_heavy(n), 8, 500, oracle::kOracleSeed);
    EXPECT_TRUE(r.ok()) << n;
    EXPECT_EQ(r.grid_points, 81u);
    EXPECT_EQ(r.deterministic_rules, std::size_t{1} << (n + 1));
    EXPECT_EQ(r.random_rules, 500u);
  }
  EXPECT_THROW(oracle::verify_projection(testing::uniform(11), 4, 0, 1), SizeError);
}

TEST(BruteRawlsian, N3Uniform) {
  const auto r = oracle::brute_rawlsian(testing::uniform(3), 4);
  EXPECT_EQ(r.objective, Rational(3, 8));
  EXPECT_TRUE(is_monotone(r.best_rule));
  EXPECT_THROW(oracle::brute_rawlsian(testing::uniform(6), 2), SizeError);
}

TEST(Grid, Size) {
  const auto g = oracle::reduced_form_grid(4);
  ASSERT_EQ(g.size(), 25u);
  EXPECT_EQ(g.back(), (ReducedForm{1, 1}));
}

}  // namespace
}  // namespace rfvote
