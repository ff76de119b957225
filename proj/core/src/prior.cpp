#include "rfvote/prior.hpp"

#include <string>
#include <utility>

#include "rfvote/errors.hpp"

namespace rfvote {

const Rational& CountDistribution::mass(int k) const {
  if (k < 0 || k > n()) {
    throw IndexError("count index " + std::to_string(k) + " outside [0, " + std::to_string(n()) + "]");
  }
  return b[static_cast<std::size_t>(k)];
}

const Rational& ExchangeablePrior::lambda(int k) const {
  if (k < 0 || k > n_) {
    throw IndexError("lambda index " + std::to_string(k) + " outside [0, " + std::to_string(n_) + "]");
  }
  return lambda_[static_cast<std::size_t>(k)];
}

ExchangeablePrior ExchangeablePrior::from_lambda(int n, std::vector<Rational> lambda) {
  if (n < 2) throw DimensionError("prior needs at least 2 agents, got " + std::to_string(n));
  for (auto& x : lambda) x.canonicalize();
  if (lambda.size() != static_cast<std::size_t>(n) + 1) {
    throw DimensionError("lambda has " + std::to_string(lambda.size()) + " entries, expected " +
                         std::to_string(n + 1));
  }
  ExchangeablePrior prior;
  prior.n_ = n;
  prior.counts_.b.reserve(lambda.size());
  Rational total = 0;
  Rational expected = 0;
  for (int k = 0; k <= n; ++k) {
    const Rational& l = lambda[static_cast<std::size_t>(k)];
    if (sgn(l) < 0) {
      throw NormalizationError("lambda[" + std::to_string(k) + "] = " + to_exact_string(l) + " is negative");
    }
    Rational b = l * Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
    total += b;
    expected += k * b;
    prior.counts_.b.push_back(std::move(b));
  }
  if (total != 1) {
    throw NormalizationError("sum of C(n,k) * lambda[k] is " + to_exact_string(total) + ", expected 1");
  }
  prior.pi_ = expected / n;
  if (sgn(prior.pi_) == 0 || prior.pi_ == 1) {
    throw DegenerateMarginalError("marginal probability of type a is " + to_exact_string(prior.pi_));
  }
  prior.lambda_ = std::move(lambda);
  return prior;
}

ExchangeablePrior ExchangeablePrior::independent(int n, const Rational& pi_in) {
  const Rational pi = canonical(pi_in);
  if (sgn(pi) <= 0 || pi >= 1) {
    throw DegenerateMarginalError("independent prior needs 0 < pi < 1, got " + to_exact_string(pi));
  }
  if (n < 2) throw DimensionError("prior needs at least 2 agents, got " + std::to_string(n));
  std::vector<Rational> lambda;
  lambda.reserve(static_cast<std::size_t>(n) + 1);
  const Rational rest = 1 - pi;
  for (int k = 0; k <= n; ++k) {
    lambda.push_back(power(pi, static_cast<unsigned>(k)) * power(rest, static_cast<unsigned>(n - k)));
  }
  return from_lambda(n, std::move(lambda));
}

}  // namespace rfvote
