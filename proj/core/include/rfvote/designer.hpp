#pragma once

#include <vector>

#include "rfvote/prior.hpp"
#include "rfvote/rational.hpp"
#include "rfvote/rules.hpp"

namespace rfvote {

/// Ex-ante Rawlsian rule: the monotone rule maximizing
/// min(pi Q(a), (1 - pi)(1 - Q(b))), the smaller of the expected shares of
/// satisfied a-types and satisfied b-types.
struct RawlsianSolution {
  int j_star = 0;
  Rational alpha;  // weight on the quota-j* majority; the rest goes to quota j*+1
  ReducedForm reduced;
  SymmetricRule rule;
  Rational objective;
};

/// Rawlsian objective min(pi Q(a), (1 - pi)(1 - Q(b))) of a reduced form.
Rational rawlsian_objective(const ReducedForm& q, const ExchangeablePrior& prior);

/// H(j) = j (1 - pi) + sum_{k>=j} (k - j) B(k); n * objective of the best
/// rule binding the quota-j constraint.
Rational rawlsian_bound(const ExchangeablePrior& prior, int j);

/// j* is the largest quota whose upper tail sum_{k>=j*} B(k) still covers
/// 1 - pi; the optimum mixes the majorities with quotas j* and j* + 1
/// (quota n + 1 being the constant-b rule).
RawlsianSolution rawlsian(const ExchangeablePrior& prior);

/// Which incentive constraint a failed belief condition breaks.
enum class ObicBranch {
  AType,  // lambda(j) > (lambda(1) + lambda(n)) / C(n-1, j-1)
  BType,  // lambda(j) > (lambda(0) + lambda(n-1)) / C(n-1, j)
};

struct ObicFreeFailure {
  int j = 0;
  ObicBranch branch = ObicBranch::AType;
  Rational lhs;  // lambda(j)
  Rational rhs;  // the violated bound
  /// Quota of a u-qualified anti-majority that fails OBIC: j for AType,
  /// j + 1 for BType.
  int witness_quota = 0;
};

struct ObicFreeResult {
  bool holds = true;
  std::vector<ObicFreeFailure> failures;
};

/// Belief condition under which every unanimous symmetric rule is OBIC.
/// Checks both branches for every j in 1..n-1 and reports each failure.
ObicFreeResult obic_free_check(const ExchangeablePrior& prior);

struct ObicFreeIndependentResult {
  bool holds = true;
  std::vector<int> failures;
};

/// Independent-prior form: C(n-1, j-1) <= r^(n-j) + r^(1-j) with
/// r = pi / (1 - pi), for j in 1..n-1. Throws DegenerateMarginalError
/// unless 0 < pi < 1.
ObicFreeIndependentResult obic_free_independent_check(int n, const Rational& pi);

}  // namespace rfvote
