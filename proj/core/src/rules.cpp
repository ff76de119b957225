#include "rfvote/rules.hpp"

#include <string>
#include <utility>

#include "rfvote/errors.hpp"

namespace rfvote {

namespace {

void require_dimension(const SymmetricRule& rule, const ExchangeablePrior& prior) {
  if (rule.n() != prior.n()) {
    throw DimensionError("rule is for " + std::to_string(rule.n()) + " agents, prior for " +
                         std::to_string(prior.n()));
  }
}

}  // namespace

SymmetricRule::SymmetricRule(std::vector<Rational> q) : q_(std::move(q)) {
  if (q_.size() < 3) throw DimensionError("rule needs at least 3 entries (n >= 2)");
  for (std::size_t k = 0; k < q_.size(); ++k) {
    q_[k].canonicalize();
    if (sgn(q_[k]) < 0 || q_[k] > 1) {
      throw RangeError("q[" + std::to_string(k) + "] = " + to_exact_string(q_[k]) + " is outside [0, 1]");
    }
  }
}

std::string_view to_string(QuotaFamily family) {
  switch (family) {
    case QuotaFamily::QualifiedMajority: return "qualified_majority";
    case QuotaFamily::QualifiedAntiMajority: return "qualified_anti_majority";
    case QuotaFamily::UQualifiedMajority: return "u_qualified_majority";
    case QuotaFamily::UQualifiedAntiMajority: return "u_qualified_anti_majority";
  }
  return "unknown";
}

QuotaFamily parse_quota_family(std::string_view name) {
  for (auto f : {QuotaFamily::QualifiedMajority, QuotaFamily::QualifiedAntiMajority,
                 QuotaFamily::UQualifiedMajority, QuotaFamily::UQualifiedAntiMajority}) {
    if (to_string(f) == name) return f;
  }
  throw ParseError("unknown quota family '" + std::string(name) + "'");
}

SymmetricRule quota_rule(QuotaFamily family, int quota, int n) {
  if (n < 2) throw DimensionError("quota rules need n >= 2");
  const bool unanimous = family == QuotaFamily::UQualifiedMajority || family == QuotaFamily::UQualifiedAntiMajority;
  const int lo = unanimous ? 1 : 0;
  if (quota < lo || quota > n) {
    throw QuotaRangeError(std::string(to_string(family)) + " quota " + std::to_string(quota) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(n) + "]");
  }
  std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    bool choose_a = false;
    switch (family) {
      case QuotaFamily::QualifiedMajority:
      case QuotaFamily::UQualifiedMajority:
        choose_a = k >= quota;
        break;
      case QuotaFamily::QualifiedAntiMajority:
        choose_a = k < quota;
        break;
      case QuotaFamily::UQualifiedAntiMajority:
        choose_a = (k >= 1 && k <= quota - 1) || k == n;
        break;
    }
    q[static_cast<std::size_t>(k)] = choose_a ? 1 : 0;
  }
  return SymmetricRule(std::move(q));
}

SymmetricRule constant_rule(int n, const Rational& value) {
  return SymmetricRule(std::vector<Rational>(static_cast<std::size_t>(n) + 1, value));
}

ReducedForm reduced_form(const SymmetricRule& rule, const ExchangeablePrior& prior) {
  require_dimension(rule, prior);
  const int n = prior.n();
  Rational a_sum = 0;
  Rational b_sum = 0;
  for (int k = 0; k <= n; ++k) {
    Rational weight = rule[k] * prior.mass(k);
    a_sum += k * weight;
    b_sum += (n - k) * weight;
  }
  const Rational& pi = prior.marginal();
  return {a_sum / (n * pi), b_sum / (n * (1 - pi))};
}

MisreportForm interim_misreport(const SymmetricRule& rule, const ExchangeablePrior& prior) {
  require_dimension(rule, prior);
  const int n = prior.n();
  // An a-type misreporting b removes one a-report from the count; a b-type
  // misreporting a adds one.
  Rational b_given_a = 0;
  for (int k = 1; k <= n; ++k) b_given_a += rule[k - 1] * k * prior.mass(k);
  Rational a_given_b = 0;
  for (int k = 0; k < n; ++k) a_given_b += rule[k + 1] * (n - k) * prior.mass(k);
  const Rational& pi = prior.marginal();
  return {b_given_a / (n * pi), a_given_b / (n * (1 - pi))};
}

bool is_monotone(const SymmetricRule& rule) {
  for (int k = 1; k <= rule.n(); ++k) {
    if (rule[k] < rule[k - 1]) return false;
  }
  return true;
}

bool is_unanimous(const SymmetricRule& rule) { return sgn(rule[0]) == 0 && rule[rule.n()] == 1; }

bool is_obic(const SymmetricRule& rule, const ExchangeablePrior& prior) {
  const ReducedForm truthful = reduced_form(rule, prior);
  const MisreportForm lie = interim_misreport(rule, prior);
  return truthful.qa >= lie.q_b_given_a && lie.q_a_given_b >= truthful.qb;
}

}  // namespace rfvote
