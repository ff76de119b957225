#include "rfvote/designer.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>

#include "rfvote/errors.hpp"

namespace rfvote {

Rational rawlsian_objective(const ReducedForm& q_in, const ExchangeablePrior& prior) {
  const ReducedForm q = canonical(q_in);
  const Rational& pi = prior.marginal();
  Rational a_side = pi * q.qa;
  Rational b_side = (1 - pi) * (1 - q.qb);
  return std::min(a_side, b_side);
}

Rational rawlsian_bound(const ExchangeablePrior& prior, int j) {
  const int n = prior.n();
  if (j < 0 || j > n) throw IndexError("quota " + std::to_string(j) + " outside [0, " + std::to_string(n) + "]");
  Rational h = j * (1 - prior.marginal());
  for (int k = j; k <= n; ++k) h += (k - j) * prior.mass(k);
  return h;
}

RawlsianSolution rawlsian(const ExchangeablePrior& prior) {
  const int n = prior.n();
  const Rational& pi = prior.marginal();
  const Rational target = 1 - pi;

  // tail[j] = sum_{k>=j} B(k), tail[n+1] = 0.
  std::vector<Rational> tail(static_cast<std::size_t>(n) + 2, Rational(0));
  for (int k = n; k >= 0; --k) tail[static_cast<std::size_t>(k)] = tail[static_cast<std::size_t>(k) + 1] + prior.mass(k);

  int j_star = 0;  // tail[0] = 1 >= 1 - pi, so the set is never empty
  for (int j = n; j >= 0; --j) {
    if (tail[static_cast<std::size_t>(j)] >= target) {
      j_star = j;
      break;
    }
  }

  // H(j) - H(j-1) = 1 - pi - tail[j]: nonpositive up to j*, positive after.
  for (int j = 1; j <= n; ++j) {
    const int step = sgn(target - tail[static_cast<std::size_t>(j)]);
    if ((j <= j_star && step > 0) || (j > j_star && step <= 0)) {
      throw DegenerateError("H is not unimodal at j = " + std::to_string(j));
    }
  }

  const Rational& b_star = prior.mass(j_star);
  const Rational remainder = target - tail[static_cast<std::size_t>(j_star) + 1];
  // Maximality of j* makes the remainder positive, hence B(j*) > 0.
  if (sgn(b_star) == 0) {
    if (sgn(remainder) != 0) throw DegenerateError("B(j*) = 0 with nonzero remainder");
  }
  Rational alpha = sgn(b_star) == 0 ? Rational(0) : Rational(remainder / b_star);
  assert(sgn(alpha) >= 0 && alpha <= 1);

  std::vector<Rational> q(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = j_star + 1; k <= n; ++k) q[static_cast<std::size_t>(k)] = 1;
  q[static_cast<std::size_t>(j_star)] = alpha;
  SymmetricRule rule(std::move(q));

  const Rational h = rawlsian_bound(prior, j_star);
  const Rational spill = h - j_star * target;  // sum_{k>=j*} (k - j*) B(k)
  ReducedForm reduced{h / (n * pi), ((n - j_star) * target - spill) / (n * target)};

  RawlsianSolution out{j_star, std::move(alpha), std::move(reduced), std::move(rule), h / n};
  return out;
}

ObicFreeResult obic_free_check(const ExchangeablePrior& prior) {
  const int n = prior.n();
  ObicFreeResult result;
  const Rational a_mass = prior.lambda(1) + prior.lambda(n);
  const Rational b_mass = prior.lambda(0) + prior.lambda(n - 1);
  for (int j = 1; j <= n - 1; ++j) {
    const Rational& l = prior.lambda(j);
    Rational a_bound = a_mass / Rational(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(j - 1)));
    Rational b_bound = b_mass / Rational(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(j)));
    if (l > a_bound) result.failures.push_back({j, ObicBranch::AType, l, std::move(a_bound), j});
    if (l > b_bound) result.failures.push_back({j, ObicBranch::BType, l, std::move(b_bound), j + 1});
  }
  result.holds = result.failures.empty();
  return result;
}

ObicFreeIndependentResult obic_free_independent_check(int n, const Rational& pi_in) {
  const Rational pi = canonical(pi_in);
  if (sgn(pi) <= 0 || pi >= 1) {
    throw DegenerateMarginalError("need 0 < pi < 1, got " + to_exact_string(pi));
  }
  if (n < 2) throw DimensionError("need n >= 2");
  const Rational ratio = pi / (1 - pi);
  const Rational inverse = (1 - pi) / pi;
  ObicFreeIndependentResult result;
  for (int j = 1; j <= n - 1; ++j) {
    Rational lhs(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(j - 1)));
    Rational rhs = power(ratio, static_cast<unsigned>(n - j)) + power(inverse, static_cast<unsigned>(j - 1));
    if (lhs > rhs) result.failures.push_back(j);
  }
  result.holds = result.failures.empty();
  return result;
}

}  // namespace rfvote
