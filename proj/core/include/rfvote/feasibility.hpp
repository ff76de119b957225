#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "rfvote/prior.hpp"
#include "rfvote/rational.hpp"
#include "rfvote/rules.hpp"

namespace rfvote {

/// Which implementability question a constraint system answers.
enum class System { General, Monotone, Unanimous };

/// Upper: sum_{k>=j} (k-j) B(k) bounds (n-j) pi Q(a) - j (1-pi) Q(b) from above.
/// Lower: the matching lower bound (with the unanimity correction for
/// System::Unanimous). Order: Q(a) - Q(b) >= 0.
enum class Family { Lower, Upper, Order };

std::string_view to_string(System system);
std::string_view to_string(Family family);

struct ConstraintId {
  System system = System::General;
  Family family = Family::Upper;
  int j = 0;

  auto operator<=>(const ConstraintId&) const = default;
  /// e.g. "general.upper[2]", "monotone.order".
  std::string str() const;
};

/// coef_a * Q(a) + coef_b * Q(b) + constant >= 0.
struct LinearConstraint {
  ConstraintId id;
  Rational coef_a;
  Rational coef_b;
  Rational constant;

  Rational slack(const ReducedForm& q) const { return coef_a * q.qa + coef_b * q.qb + constant; }
};

struct ConstraintSlack {
  ConstraintId id;
  Rational slack;
};

struct FeasibilityReport {
  System system = System::General;
  std::vector<ConstraintSlack> slacks;  // every constraint, never fail-fast
  bool feasible = false;
  std::vector<ConstraintId> binding;  // zero slack

  std::vector<ConstraintId> violated() const;
  const ConstraintSlack& slack(const ConstraintId& id) const;
};

/// Constraints in report order: ascending j, lower before upper, then the
/// order constraint for System::Monotone.
std::vector<LinearConstraint> constraint_system(System system, const ExchangeablePrior& prior);

FeasibilityReport check(System system, const ReducedForm& q, const ExchangeablePrior& prior);

/// Q is generated by some symmetric rule.
FeasibilityReport check_implementable(const ReducedForm& q, const ExchangeablePrior& prior);
/// Q is generated by some monotone (strategy-proof) rule.
FeasibilityReport check_monotone_implementable(const ReducedForm& q, const ExchangeablePrior& prior);
/// Q is generated by some unanimous rule (q(0) = 0, q(n) = 1).
FeasibilityReport check_u_implementable(const ReducedForm& q, const ExchangeablePrior& prior);

}  // namespace rfvote
