#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rfvote/rational.hpp"

namespace rfvote {

/// Q^j(a) - Q^j(b) for the quota-j majority under the i.i.d. prior with
/// marginal pi: C(n-1, j-1) pi^(j-1) (1 - pi)^(n-j). The anti-majority with
/// the same quota has the same gap with the sign flipped.
/// Throws QuotaRangeError unless 1 <= j <= n, DomainError unless 0 < pi < 1.
Rational quota_gap(int n, const Rational& pi, int j);

/// Same quantity in floating point, evaluated in log space (lgamma) so it
/// stays finite for large n.
double quota_gap(int n, double pi, int j);

struct GapMaximum {
  int j = 1;  // smallest maximizing quota
  Rational gap;
};

/// Largest quota gap over j in 1..n, exact.
GapMaximum max_gap_fixed_pi(const Rational& pi, int n);

struct GapMaximumApprox {
  int j = 1;
  double gap = 0.0;
};
GapMaximumApprox max_gap_fixed_pi(double pi, int n);

struct PoissonBound {
  int k_mu = 0;  // smallest maximizer of mu^k / k!
  double m = 0.0;  // mu^k_mu e^-mu / k_mu!
};

/// Limiting largest gap when n grows with n * pi = mu fixed. At integer mu
/// the maximizer is tied between mu - 1 and mu; the smaller is reported.
/// Throws DomainError unless mu > 0.
PoissonBound poisson_bound(const Rational& mu);

/// Limit of quota_gap(n, mu / n, j) as n grows: mu^(j-1) e^-mu / (j-1)!.
double poisson_gap_limit(double mu, int j);

enum class Regime { FixedPi, FixedMu };
std::string_view to_string(Regime regime);

struct GapRow {
  int n = 0;
  int j = 0;
  double gap = 0.0;
  double limit = 0.0;
  double error = 0.0;  // |gap - limit|
  std::optional<Rational> exact_gap;  // present when n <= kExactGapLimit
};

struct GapTable {
  Regime regime = Regime::FixedPi;
  Rational parameter;  // pi or mu
  std::vector<GapRow> rows;
};

/// Rows at or below this n also carry the exact rational gap.
inline constexpr int kExactGapLimit = 64;

/// Largest quota gap for each n at fixed pi; the limit column is 0.
GapTable gap_convergence(const Rational& pi, std::span<const int> ns);

/// Gap of quota k_mu + 1 at pi_n = mu / n for each n, against M(mu).
/// Throws DomainError unless mu > 0 and every n > mu.
GapTable gap_convergence_fixed_mu(const Rational& mu, std::span<const int> ns);

}  // namespace rfvote
