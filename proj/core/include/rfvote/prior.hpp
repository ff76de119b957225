#pragma once

#include <span>
#include <vector>

#include "rfvote/rational.hpp"

namespace rfvote {

/// Distribution of the number of type-a agents: b[k] = C(n,k) * lambda[k].
struct CountDistribution {
  std::vector<Rational> b;

  int n() const { return static_cast<int>(b.size()) - 1; }
  /// Probability that exactly k agents have type a.
  const Rational& mass(int k) const;
};

/// Exchangeable prior over type profiles of n agents.
///
/// lambda[k] is the probability that one fixed set of k agents has type a
/// and everyone else type b. Permutation symmetry is implicit: profiles are
/// never materialized. Immutable once constructed.
class ExchangeablePrior {
 public:
  /// Validates and caches the count distribution and the marginal.
  /// Throws DimensionError (n < 2 or lambda.size() != n + 1),
  /// NormalizationError (negative entry, or sum C(n,k) lambda[k] != 1),
  /// DegenerateMarginalError (marginal is 0 or 1).
  static ExchangeablePrior from_lambda(int n, std::vector<Rational> lambda);

  /// i.i.d. types: lambda[k] = pi^k (1 - pi)^(n - k).
  static ExchangeablePrior independent(int n, const Rational& pi);

  int n() const { return n_; }
  std::span<const Rational> lambda() const { return lambda_; }
  const Rational& lambda(int k) const;
  const CountDistribution& counts() const { return counts_; }

  /// B(k); throws IndexError when k is outside [0, n].
  const Rational& mass(int k) const { return counts_.mass(k); }

  /// Marginal probability pi that a given agent has type a.
  const Rational& marginal() const { return pi_; }

 private:
  ExchangeablePrior() = default;

  int n_ = 0;
  std::vector<Rational> lambda_;
  CountDistribution counts_;
  Rational pi_;
};

}  // namespace rfvote
