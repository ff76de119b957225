#pragma once

#include <ostream>
#include <vector>

#include "rfvote/prior.hpp"
#include "rfvote/rational.hpp"
#include "rfvote/rules.hpp"

namespace rfvote {

// gtest printers
inline void PrintTo(const ReducedForm& q, std::ostream* os) {
  *os << "(" << to_exact_string(q.qa) << ", " << to_exact_string(q.qb) << ")";
}
inline void PrintTo(const SymmetricRule& r, std::ostream* os) {
  *os << "q=(";
  for (int k = 0; k <= r.n(); ++k) *os << (k ? "," : "") << to_exact_string(r[k]);
  *os << ")";
}

}  // namespace rfvote

namespace rfvote::testing {

// Correlated prior with heavy unanimous profiles: lambda(0) = lambda(n) = 1/5,
// remaining 3/5 spread evenly over the 2^n - 2 mixed profiles.
// At n = 4 the interior lambda is 3/70.
inline ExchangeablePrior endpoint_heavy(int n) {
  const Rational mixed = Rational(Integer(1) << n) - 2;
  std::vector<Rational> lambda(static_cast<std::size_t>(n) + 1, Rational(3, 5) / mixed);
  lambda.front() = Rational(1, 5);
  lambda.back() = Rational(1, 5);
  for (auto& x : lambda) x.canonicalize();
  return ExchangeablePrior::from_lambda(n, std::move(lambda));
}

inline ExchangeablePrior uniform(int n) { return ExchangeablePrior::independent(n, Rational(1, 2)); }

}  // namespace rfvote::testing
