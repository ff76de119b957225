#include "rfvote/asymptotics.hpp"

#include <cmath>
#include <string>

#include "rfvote/errors.hpp"

namespace rfvote {

namespace {

void require_quota(int n, int j) {
  if (n < 1) throw DomainError("need n >= 1, got " + std::to_string(n));
  if (j < 1 || j > n) {
    throw QuotaRangeError("quota " + std::to_string(j) + " outside [1, " + std::to_string(n) + "]");
  }
}

}  // namespace

Rational quota_gap(int n, const Rational& pi_in, int j) {
  const Rational pi = canonical(pi_in);
  require_quota(n, j);
  if (sgn(pi) <= 0 || pi >= 1) throw DomainError("need 0 < pi < 1, got " + to_exact_string(pi));
  return Rational(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(j - 1))) *
         power(pi, static_cast<unsigned>(j - 1)) * power(1 - pi, static_cast<unsigned>(n - j));
}

double quota_gap(int n, double pi, int j) {
  require_quota(n, j);
  if (!(pi > 0.0 && pi < 1.0)) throw DomainError("need 0 < pi < 1");
  const double m = n - 1;
  const double k = j - 1;
  const double log_binom = std::lgamma(m + 1) - std::lgamma(k + 1) - std::lgamma(m - k + 1);
  return std::exp(log_binom + k * std::log(pi) + (m - k) * std::log1p(-pi));
}

GapMaximum max_gap_fixed_pi(const Rational& pi_in, int n) {
  const Rational pi = canonical(pi_in);
  GapMaximum best{1, quota_gap(n, pi, 1)};
  for (int j = 2; j <= n; ++j) {
    Rational g = quota_gap(n, pi, j);
    if (g > best.gap) best = {j, std::move(g)};
  }
  return best;
}

GapMaximumApprox max_gap_fixed_pi(double pi, int n) {
  GapMaximumApprox best{1, quota_gap(n, pi, 1)};
  // When n * pi is an integer two quotas tie exactly; the relative margin
  // keeps the smaller one, as the exact path does.
  for (int j = 2; j <= n; ++j) {
    const double g = quota_gap(n, pi, j);
    if (g > best.gap * (1.0 + 1e-9)) best = {j, g};
  }
  return best;
}

PoissonBound poisson_bound(const Rational& mu_in) {
  const Rational mu = canonical(mu_in);
  if (sgn(mu) <= 0) throw DomainError("need mu > 0, got " + to_exact_string(mu));
  // mu^k / k! grows while k < mu: the smallest maximizer is ceil(mu) - 1.
  const Integer k = ceil(mu) - 1;
  if (!k.fits_sint_p()) throw DomainError("mu too large");
  PoissonBound out;
  out.k_mu = static_cast<int>(k.get_si());
  out.m = poisson_gap_limit(mu.get_d(), out.k_mu + 1);
  return out;
}

double poisson_gap_limit(double mu, int j) {
  if (j < 1) throw QuotaRangeError("quota must be >= 1");
  const double k = j - 1;
  return std::exp(k * std::log(mu) - mu - std::lgamma(k + 1));
}

std::string_view to_string(Regime regime) {
  return regime == Regime::FixedPi ? "fixed_pi" : "fixed_mu";
}

GapTable gap_convergence(const Rational& pi_in, std::span<const int> ns) {
  const Rational pi = canonical(pi_in);
  GapTable table{Regime::FixedPi, pi, {}};
  for (int n : ns) {
    GapRow row;
    row.n = n;
    if (n <= kExactGapLimit) {
      GapMaximum best = max_gap_fixed_pi(pi, n);
      row.j = best.j;
      row.gap = best.gap.get_d();
      row.exact_gap = std::move(best.gap);
    } else {
      const GapMaximumApprox best = max_gap_fixed_pi(pi.get_d(), n);
      row.j = best.j;
      row.gap = best.gap;
    }
    row.limit = 0.0;
    row.error = row.gap;
    table.rows.push_back(std::move(row));
  }
  return table;
}

GapTable gap_convergence_fixed_mu(const Rational& mu_in, std::span<const int> ns) {
  const Rational mu = canonical(mu_in);
  const PoissonBound bound = poisson_bound(mu);
  GapTable table{Regime::FixedMu, mu, {}};
  for (int n : ns) {
    if (Rational(n) <= mu) {
      throw DomainError("n = " + std::to_string(n) + " must exceed mu = " + to_exact_string(mu));
    }
    const int j = bound.k_mu + 1;
    if (j > n) throw DomainError("quota k_mu + 1 exceeds n = " + std::to_string(n));
    GapRow row;
    row.n = n;
    row.j = j;
    const Rational pi_n = mu / n;
    if (n <= kExactGapLimit) {
      Rational g = quota_gap(n, pi_n, j);
      row.gap = g.get_d();
      row.exact_gap = std::move(g);
    } else {
      row.gap = quota_gap(n, pi_n.get_d(), j);
    }
    row.limit = bound.m;
    row.error = std::fabs(row.gap - row.limit);
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace rfvote
