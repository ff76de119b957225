#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rfvote/prior.hpp"
#include "rfvote/rational.hpp"

namespace rfvote {

/// Symmetric voting rule: q[k] is the probability of choosing alternative a
/// when exactly k agents report type a. Deterministic rules are the 0/1 case.
class SymmetricRule {
 public:
  /// Throws DimensionError for fewer than 2 entries, RangeError if any
  /// entry is outside [0, 1].
  explicit SymmetricRule(std::vector<Rational> q);

  int n() const { return static_cast<int>(q_.size()) - 1; }
  std::span<const Rational> q() const { return q_; }
  const Rational& operator[](int k) const { return q_[static_cast<std::size_t>(k)]; }

  bool operator==(const SymmetricRule&) const = default;

 private:
  std::vector<Rational> q_;
};

enum class QuotaFamily {
  QualifiedMajority,
  QualifiedAntiMajority,
  UQualifiedMajority,
  UQualifiedAntiMajority,
};

std::string_view to_string(QuotaFamily family);
/// Accepts the snake_case names produced by to_string. Throws ParseError.
QuotaFamily parse_quota_family(std::string_view name);

/// Symbolic extreme rule. Majority and anti-majority accept quotas 0..n,
/// the unanimous variants 1..n.
struct QuotaRule {
  QuotaFamily family = QuotaFamily::QualifiedMajority;
  int quota = 0;

  bool operator==(const QuotaRule&) const = default;
};

/// Interim probability that a is chosen given one's own type is a / b.
struct ReducedForm {
  Rational qa;
  Rational qb;

  bool operator==(const ReducedForm&) const = default;
};

inline ReducedForm canonical(const ReducedForm& q) { return {canonical(q.qa), canonical(q.qb)}; }

/// Interim probability of a when misreporting: Q(b|a) is the probability
/// of a for a type-a agent reporting b, Q(a|b) for a type-b agent reporting a.
struct MisreportForm {
  Rational q_b_given_a;
  Rational q_a_given_b;

  bool operator==(const MisreportForm&) const = default;
};

SymmetricRule quota_rule(QuotaFamily family, int quota, int n);
inline SymmetricRule to_rule(const QuotaRule& rule, int n) { return quota_rule(rule.family, rule.quota, n); }

/// Constant rule q(k) = value for every k.
SymmetricRule constant_rule(int n, const Rational& value);

ReducedForm reduced_form(const SymmetricRule& rule, const ExchangeablePrior& prior);
MisreportForm interim_misreport(const SymmetricRule& rule, const ExchangeablePrior& prior);

bool is_monotone(const SymmetricRule& rule);
bool is_unanimous(const SymmetricRule& rule);

/// Both ordinal IC constraints, weak: Q(a) >= Q(b|a) and Q(a|b) >= Q(b).
bool is_obic(const SymmetricRule& rule, const ExchangeablePrior& prior);

}  // namespace rfvote
