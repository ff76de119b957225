#include <gtest/gtest.h>

#include "rfvote/errors.hpp"
#include "rfvote/oracle.hpp"
#include "rfvote/rules.hpp"
#include "support/fixtures.hpp"

namespace rfvote {
namespace {

SymmetricRule rule(std::initializer_list<int> bits) {
  std::vector<Rational> q;
  for (int b : bits) q.emplace_back(b);
  return SymmetricRule(std::move(q));
}

TEST(QuotaRules, Shapes) {
  EXPECT_EQ(quota_rule(QuotaFamily::QualifiedMajority, 2, 3), rule({0, 0, 1, 1}));
  EXPECT_EQ(quota_rule(QuotaFamily::QualifiedMajority, 0, 3), rule({1, 1, 1, 1}));
  EXPECT_EQ(quota_rule(QuotaFamily::QualifiedAntiMajority, 2, 3), rule({1, 1, 0, 0}));
  EXPECT_EQ(quota_rule(QuotaFamily::QualifiedAntiMajority, 0, 3), rule({0, 0, 0, 0}));
  EXPECT_EQ(quota_rule(QuotaFamily::UQualifiedMajority, 2, 3), rule({0, 0, 1, 1}));
  EXPECT_EQ(quota_rule(QuotaFamily::UQualifiedAntiMajority, 2, 3), rule({0, 1, 0, 1}));
}

TEST(QuotaRules, RangeErrors) {
  EXPECT_THROW(quota_rule(QuotaFamily::QualifiedMajority, 4, 3), QuotaRangeError);
  EXPECT_THROW(quota_rule(QuotaFamily::QualifiedMajority, -1, 3), QuotaRangeError);
  EXPECT_THROW(quota_rule(QuotaFamily::UQualifiedMajority, 0, 3), QuotaRangeError);
  EXPECT_THROW(SymmetricRule({Rational(3, 2), 0, 0}), RangeError);
}

TEST(QuotaFamilyNames, RoundTrip) {
  for (auto f : {QuotaFamily::QualifiedMajority, QuotaFamily::QualifiedAntiMajority, QuotaFamily::UQualifiedMajority,
                 QuotaFamily::UQualifiedAntiMajority}) {
    EXPECT_EQ(parse_quota_family(to_string(f)), f);
  }
  EXPECT_THROW(parse_quota_family("plurality"), ParseError);
}

TEST(ReducedForm, MajorityN3Uniform) {
  const auto q = reduced_form(quota_rule(QuotaFamily::QualifiedMajority, 2, 3), testing::uniform(3));
  EXPECT_EQ(q.qa, Rational(3, 4));
  EXPECT_EQ(q.qb, Rational(1, 4));
}

TEST(ReducedForm, ConstantsAreCorners) {
  const auto p = testing::endpoint_heavy(5);
  EXPECT_EQ(reduced_form(constant_rule(5, 1), p), (ReducedForm{1, 1}));
  EXPECT_EQ(reduced_form(constant_rule(5, 0), p), (ReducedForm{0, 0}));
}

// Count-level formulas agree with profile enumeration.
TEST(ReducedForm, MatchesProfileEnumeration) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& p : {ExchangeablePrior::independent(n, Rational(1, 3)), testing::endpoint_heavy(n)}) {
      for (const auto& r : oracle::enumerate_deterministic(n)) {
        EXPECT_EQ(reduced_form(r, p), oracle::profile_reduced_form(r, p));
        EXPECT_EQ(interim_misreport(r, p), oracle::profile_misreport(r, p));
      }
    }
  }
}

TEST(Predicates, MonotoneUnanimousObic) {
  const auto p = testing::uniform(3);
  EXPECT_TRUE(is_monotone(rule({0, 0, 1, 1})));
  EXPECT_FALSE(is_monotone(rule({0, 1, 0, 1})));
  EXPECT_TRUE(is_unanimous(rule({0, 1, 0, 1})));
  EXPECT_FALSE(is_unanimous(rule({1, 1, 0, 1})));
  EXPECT_TRUE(is_obic(rule({0, 1, 0, 1}), p));
  EXPECT_FALSE(is_obic(rule({1, 1, 0, 0}), p));
  EXPECT_TRUE(is_obic(constant_rule(3, Rational(1, 3)), p));
}

}  // namespace
}  // namespace rfvote
