#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "rfvote/asymptotics.hpp"
#include "rfvote/errors.hpp"

namespace rfvote {
namespace {

TEST(QuotaGap, ExactSmallValues) {
  EXPECT_EQ(quota_gap(3, Rational(1, 2), 2), Rational(1, 2));
  EXPECT_EQ(quota_gap(4, Rational(1, 2), 2), Rational(3, 8));
  EXPECT_EQ(quota_gap(2, Rational(1, 3), 1), Rational(2, 3));
}

TEST(QuotaGap, FloatMatchesExact) {
  for (int n = 2; n <= 40; ++n) {
    for (int j = 1; j <= n; ++j) {
      const double exact = quota_gap(n, Rational(3, 10), j).get_d();
      EXPECT_NEAR(quota_gap(n, 0.3, j), exact, 1e-12 + 1e-10 * exact);
    }
  }
}

TEST(MaxGap, TiesAtSmallN) {
  // Ties: n=2,3 both give 1/2 and n=4,5 both 3/8, so the sequence is only
  // nonincreasing.
  EXPECT_EQ(max_gap_fixed_pi(Rational(1, 2), 2).gap, Rational(1, 2));
  EXPECT_EQ(max_gap_fixed_pi(Rational(1, 2), 3).gap, Rational(1, 2));
  EXPECT_EQ(max_gap_fixed_pi(Rational(1, 2), 4).gap, Rational(3, 8));
  EXPECT_EQ(max_gap_fixed_pi(Rational(1, 2), 5).gap, Rational(3, 8));
}

TEST(MaxGap, ApproxAgreesWithExact) {
  for (int n : {10, 50, 64}) {
    const auto exact = max_gap_fixed_pi(Rational(7, 10), n);
    const auto approx = max_gap_fixed_pi(0.7, n);
    EXPECT_EQ(approx.j, exact.j);
    EXPECT_NEAR(approx.gap, exact.gap.get_d(), 1e-12);
  }
}

TEST(PoissonBound, KnownValues) {
  EXPECT_EQ(poisson_bound(Rational(1, 2)).k_mu, 0);
  EXPECT_NEAR(poisson_bound(Rational(1, 2)).m, std::exp(-0.5), 1e-15);
  EXPECT_EQ(poisson_bound(Rational(1)).k_mu, 0);
  EXPECT_NEAR(poisson_bound(Rational(1)).m, std::exp(-1.0), 1e-15);
  EXPECT_EQ(poisson_bound(Rational(2)).k_mu, 1);
  EXPECT_NEAR(poisson_bound(Rational(2)).m, 2 * std::exp(-2.0), 1e-15);
  EXPECT_EQ(poisson_bound(Rational(5, 2)).k_mu, 2);
  EXPECT_THROW(poisson_bound(Rational(0)), DomainError);
}

TEST(GapConvergence, FixedMuRows) {
  const std::vector<int> ns{10, 100, 10000};
  const auto t = gap_convergence_fixed_mu(Rational(2), ns);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.regime, Regime::FixedMu);
  EXPECT_NEAR(t.rows[0].gap, 0.301989888, 1e-9);
  EXPECT_TRUE(t.rows[0].exact_gap.has_value());
  EXPECT_FALSE(t.rows[2].exact_gap.has_value());
  EXPECT_LT(t.rows[2].error, t.rows[1].error);
  EXPECT_LT(t.rows[2].error, 1e-3);
}

TEST(GapConvergence, FixedMuDomain) {
  const std::vector<int> ns{2};
  EXPECT_THROW(gap_convergence_fixed_mu(Rational(2), ns), DomainError);
}

TEST(GapConvergence, FixedPiLimitIsZero) {
  const std::vector<int> ns{4, 64, 1024};
  const auto t = gap_convergence(Rational(1, 2), ns);
  EXPECT_EQ(t.regime, Regime::FixedPi);
  for (const auto& r : t.rows) {
    EXPECT_EQ(r.limit, 0.0);
    EXPECT_DOUBLE_EQ(r.error, r.gap);
  }
  EXPECT_EQ(*t.rows[0].exact_gap, Rational(3, 8));
  EXPECT_LT(t.rows[2].gap, 0.03);
}

}  // namespace
}  // namespace rfvote
