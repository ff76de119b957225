#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rfvote/decomposition.hpp"
#include "rfvote/prior.hpp"
#include "rfvote/rational.hpp"
#include "rfvote/rules.hpp"

namespace rfvote::oracle {

inline constexpr int kMaxEnumerationAgents = 16;

/// All 2^(n+1) deterministic rules. Rule i has q[k] = bit k of i, so rule 0
/// is constant-b and the last rule is constant-a. Throws SizeError for n > 16.
std::vector<SymmetricRule> enumerate_deterministic(int n);

/// Reduced form by summing over all 2^n type profiles, conditioning on the
/// type of agent 0. Shares no code with the closed-form path.
ReducedForm profile_reduced_form(const SymmetricRule& rule, const ExchangeablePrior& prior);

/// Misreport probabilities by the same profile enumeration, with agent 0
/// flipping its report.
MisreportForm profile_misreport(const SymmetricRule& rule, const ExchangeablePrior& prior);

/// Objective weights over (Q(a), Q(b)).
struct SupportDirection {
  Rational mu_a;
  Rational mu_b;
};

struct SupportSolution {
  QuotaRule rule;
  Rational value;  // mu_a Q(a) + mu_b Q(b) at the optimum
  bool degenerate = false;  // every coefficient is zero: all rules tie
};

/// Maximizes mu_a Q(a) + mu_b Q(b) over all rules in closed form. In q-space
/// the objective is sum_k c(k) q(k) B(k) with c(k) affine in k, so q(k) = 1
/// exactly where c(k) > 0: a majority when c increases, an anti-majority
/// when it decreases.
SupportSolution support_maximize(const ExchangeablePrior& prior, const SupportDirection& dir);

/// Same objective maximized by scanning every deterministic rule.
Rational support_maximize_brute(const ExchangeablePrior& prior, const SupportDirection& dir);

struct Disagreement {
  std::string kind;  // "grid", "deterministic_rule", "random_rule"
  ReducedForm point;
  std::string detail;
};

struct ProjectionReport {
  int n = 0;
  int grid_denominator = 0;
  std::size_t grid_points = 0;
  std::size_t deterministic_rules = 0;
  std::size_t random_rules = 0;
  std::vector<Disagreement> disagreements;

  bool ok() const { return disagreements.empty(); }
};

inline constexpr std::uint64_t kOracleSeed = 0x5eed2024ULL;
inline constexpr std::size_t kOracleRandomRules = 10000;
/// Random rules use entries k / 64.
inline constexpr int kRandomRuleDenominator = 64;

/// Cross-validates the inequality system against the vertex hull on the
/// grid {0, 1/d, ..., 1}^2, and checks that every deterministic rule plus
/// `random_rules` pseudo-random rules have feasible reduced forms.
/// Throws SizeError for n > 10.
ProjectionReport verify_projection(const ExchangeablePrior& prior, int grid_denominator,
                                   std::size_t random_rules = kOracleRandomRules,
                                   std::uint64_t seed = kOracleSeed);

struct BruteRawlsian {
  SymmetricRule best_rule;
  Rational objective;
};

/// Best Rawlsian objective over monotone rules with entries in
/// {0, 1/g, ..., 1}. Throws SizeError for n > 5 or g < 1.
BruteRawlsian brute_rawlsian(const ExchangeablePrior& prior, int grid_steps);

/// Every reduced form on the grid {0, 1/d, ..., 1}^2, row-major in Q(a).
std::vector<ReducedForm> reduced_form_grid(int denominator);

}  // namespace rfvote::oracle
