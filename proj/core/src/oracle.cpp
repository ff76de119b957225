#include "rfvote/oracle.hpp"

#include <bit>
#include <random>
#include <string>
#include <utility>

#include "rfvote/designer.hpp"
#include "rfvote/errors.hpp"
#include "rfvote/feasibility.hpp"

namespace rfvote::oracle {

namespace {

std::string point_str(const ReducedForm& q) {
  return "(" + to_exact_string(q.qa) + ", " + to_exact_string(q.qb) + ")";
}

std::string rule_str(const SymmetricRule& rule) {
  std::string s = "(";
  for (int k = 0; k <= rule.n(); ++k) {
    if (k) s += ",";
    s += to_exact_string(rule[k]);
  }
  return s + ")";
}

void require_same_n(const SymmetricRule& rule, const ExchangeablePrior& prior) {
  if (rule.n() != prior.n()) throw DimensionError("rule and prior disagree on n");
  if (prior.n() > kMaxEnumerationAgents) throw SizeError("profile enumeration limited to n <= 16");
}

}  // namespace

std::vector<SymmetricRule> enumerate_deterministic(int n) {
  if (n < 2) throw DimensionError("need n >= 2");
  if (n > kMaxEnumerationAgents) throw SizeError("deterministic enumeration limited to n <= 16");
  const std::uint32_t count = 1u << (n + 1);
  std::vector<SymmetricRule> out;
  out.reserve(count);
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) q[static_cast<std::size_t>(k)] = (bits >> k) & 1u;
    out.emplace_back(std::move(q));
  }
  return out;
}

ReducedForm profile_reduced_form(const SymmetricRule& rule, const ExchangeablePrior& prior) {
  require_same_n(rule, prior);
  const int n = prior.n();
  Rational a_joint = 0, a_mass = 0, b_joint = 0, b_mass = 0;
  for (std::uint32_t profile = 0; profile < (1u << n); ++profile) {
    const int k = std::popcount(profile);
    const Rational& weight = prior.lambda(k);
    if (profile & 1u) {
      a_mass += weight;
      a_joint += weight * rule[k];
    } else {
      b_mass += weight;
      b_joint += weight * rule[k];
    }
  }
  return {a_joint / a_mass, b_joint / b_mass};
}

MisreportForm profile_misreport(const SymmetricRule& rule, const ExchangeablePrior& prior) {
  require_same_n(rule, prior);
  const int n = prior.n();
  Rational a_joint = 0, a_mass = 0, b_joint = 0, b_mass = 0;
  for (std::uint32_t profile = 0; profile < (1u << n); ++profile) {
    const int k = std::popcount(profile);
    const Rational& weight = prior.lambda(k);
    const int reported = std::popcount(profile ^ 1u);
    if (profile & 1u) {
      a_mass += weight;
      a_joint += weight * rule[reported];
    } else {
      b_mass += weight;
      b_joint += weight * rule[reported];
    }
  }
  return {a_joint / a_mass, b_joint / b_mass};
}

SupportSolution support_maximize(const ExchangeablePrior& prior, const SupportDirection& dir_in) {
  const SupportDirection dir{canonical(dir_in.mu_a), canonical(dir_in.mu_b)};
  const int n = prior.n();
  const Rational& pi = prior.marginal();
  const Rational hat_a = dir.mu_a / (n * pi);
  const Rational hat_b = dir.mu_b / (n * (1 - pi));
  auto coefficient = [&](int k) { return Rational(n * hat_b + k * (hat_a - hat_b)); };

  SupportSolution out;
  const int slope = sgn(hat_a - hat_b);
  if (slope > 0) {
    int cutoff = n + 1;  // first k with c(k) > 0
    for (int k = 0; k <= n; ++k) {
      if (sgn(coefficient(k)) > 0) {
        cutoff = k;
        break;
      }
    }
    out.rule = cutoff <= n ? QuotaRule{QuotaFamily::QualifiedMajority, cutoff}
                           : QuotaRule{QuotaFamily::QualifiedAntiMajority, 0};
  } else if (slope < 0) {
    int cutoff = n + 1;  // first k with c(k) <= 0
    for (int k = 0; k <= n; ++k) {
      if (sgn(coefficient(k)) <= 0) {
        cutoff = k;
        break;
      }
    }
    out.rule = cutoff <= n ? QuotaRule{QuotaFamily::QualifiedAntiMajority, cutoff}
                           : QuotaRule{QuotaFamily::QualifiedMajority, 0};
  } else {
    const int sign = sgn(hat_b);
    out.rule = sign < 0 ? QuotaRule{QuotaFamily::QualifiedAntiMajority, 0}
                        : QuotaRule{QuotaFamily::QualifiedMajority, 0};
    out.degenerate = sign == 0;
  }
  const ReducedForm q = reduced_form(to_rule(out.rule, n), prior);
  out.value = dir.mu_a * q.qa + dir.mu_b * q.qb;
  return out;
}

Rational support_maximize_brute(const ExchangeablePrior& prior, const SupportDirection& dir_in) {
  const SupportDirection dir{canonical(dir_in.mu_a), canonical(dir_in.mu_b)};
  bool first = true;
  Rational best;
  for (const SymmetricRule& rule : enumerate_deterministic(prior.n())) {
    const ReducedForm q = reduced_form(rule, prior);
    Rational value = dir.mu_a * q.qa + dir.mu_b * q.qb;
    if (first || value > best) {
      best = std::move(value);
      first = false;
    }
  }
  return best;
}

std::vector<ReducedForm> reduced_form_grid(int denominator) {
  if (denominator < 1) throw DomainError("grid denominator must be positive");
  std::vector<ReducedForm> out;
  out.reserve(static_cast<std::size_t>(denominator + 1) * static_cast<std::size_t>(denominator + 1));
  for (int a = 0; a <= denominator; ++a) {
    for (int b = 0; b <= denominator; ++b) {
      out.push_back({Rational(a, denominator), Rational(b, denominator)});
    }
  }
  for (auto& q : out) {
    q.qa.canonicalize();
    q.qb.canonicalize();
  }
  return out;
}

ProjectionReport verify_projection(const ExchangeablePrior& prior, int grid_denominator, std::size_t random_rules,
                                   std::uint64_t seed) {
  const int n = prior.n();
  if (n > 10) throw SizeError("projection verification limited to n <= 10");
  ProjectionReport report;
  report.n = n;
  report.grid_denominator = grid_denominator;

  const VertexSet hull = vertices(prior, RuleClass::All);
  for (const ReducedForm& q : reduced_form_grid(grid_denominator)) {
    const bool by_inequalities = check_implementable(q, prior).feasible;
    const bool by_hull = hull.contains(q);
    ++report.grid_points;
    if (by_inequalities != by_hull) {
      report.disagreements.push_back({"grid", q,
                                      std::string("inequalities say ") + (by_inequalities ? "feasible" : "infeasible") +
                                          ", hull says " + (by_hull ? "inside" : "outside")});
    }
  }

  auto check_rule = [&](const SymmetricRule& rule, const char* kind) {
    const ReducedForm q = reduced_form(rule, prior);
    if (!check_implementable(q, prior).feasible) {
      report.disagreements.push_back({kind, q, "rule " + rule_str(rule) + " has infeasible reduced form " + point_str(q)});
    }
  };
  for (const SymmetricRule& rule : enumerate_deterministic(n)) {
    check_rule(rule, "deterministic_rule");
    ++report.deterministic_rules;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_rules; ++i) {
    std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
    for (auto& entry : q) {
      entry = Rational(static_cast<long>(rng() % (kRandomRuleDenominator + 1)), kRandomRuleDenominator);
      entry.canonicalize();
    }
    check_rule(SymmetricRule(std::move(q)), "random_rule");
    ++report.random_rules;
  }
  return report;
}

BruteRawlsian brute_rawlsian(const ExchangeablePrior& prior, int grid_steps) {
  const int n = prior.n();
  if (n > 5) throw SizeError("grid Rawlsian search limited to n <= 5");
  if (grid_steps < 1) throw SizeError("grid_steps must be >= 1");
  const Rational& pi = prior.marginal();

  // Integer bookkeeping: q(k) = level[k] / g, scaled objective sums.
  // n * g * pi Q(a)           = sum_k k B(k) level[k]
  // n * g * (1-pi) (1 - Q(b)) = n g (1 - pi) - sum_k (n-k) B(k) level[k]
  std::vector<Rational> a_weight, b_weight;
  for (int k = 0; k <= n; ++k) {
    a_weight.push_back(k * prior.mass(k));
    b_weight.push_back((n - k) * prior.mass(k));
  }
  const Rational b_base = n * grid_steps * (1 - pi);

  std::vector<int> level(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> best_level = level;
  Rational best_scaled;
  bool have_best = false;

  auto recurse = [&](auto&& self, int k, int floor, const Rational& a_sum, const Rational& b_sum) -> void {
    if (k > n) {
      Rational b_side = b_base - b_sum;
      const Rational& value = a_sum < b_side ? a_sum : b_side;
      if (!have_best || value > best_scaled) {
        best_scaled = value;
        best_level = level;
        have_best = true;
      }
      return;
    }
    for (int l = floor; l <= grid_steps; ++l) {
      level[static_cast<std::size_t>(k)] = l;
      self(self, k + 1, l, Rational(a_sum + l * a_weight[static_cast<std::size_t>(k)]),
           Rational(b_sum + l * b_weight[static_cast<std::size_t>(k)]));
    }
  };
  recurse(recurse, 0, 0, Rational(0), Rational(0));

  std::vector<Rational> q;
  for (int l : best_level) {
    Rational entry(l, grid_steps);
    entry.canonicalize();
    q.push_back(std::move(entry));
  }
  return {SymmetricRule(std::move(q)), best_scaled / (n * grid_steps)};
}

}  // namespace rfvote::oracle
