#include "rfvote/feasibility.hpp"

#include <algorithm>

#include "rfvote/errors.hpp"

namespace rfvote {

std::string_view to_string(System system) {
  switch (system) {
    case System::General: return "general";
    case System::Monotone: return "monotone";
    case System::Unanimous: return "unanimous";
  }
  return "unknown";
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Lower: return "lower";
    case Family::Upper: return "upper";
    case Family::Order: return "order";
  }
  return "unknown";
}

std::string ConstraintId::str() const {
  std::string s = std::string(to_string(system)) + "." + std::string(to_string(family));
  if (family != Family::Order) s += "[" + std::to_string(j) + "]";
  return s;
}

std::vector<ConstraintId> FeasibilityReport::violated() const {
  std::vector<ConstraintId> out;
  for (const auto& s : slacks) {
    if (sgn(s.slack) < 0) out.push_back(s.id);
  }
  return out;
}

const ConstraintSlack& FeasibilityReport::slack(const ConstraintId& id) const {
  auto it = std::find_if(slacks.begin(), slacks.end(), [&](const ConstraintSlack& s) { return s.id == id; });
  if (it == slacks.end()) throw IndexError("no constraint " + id.str() + " in report");
  return *it;
}

std::vector<LinearConstraint> constraint_system(System system, const ExchangeablePrior& prior) {
  const int n = prior.n();
  const Rational& pi = prior.marginal();
  const Rational rest = 1 - pi;

  std::vector<LinearConstraint> out;
  out.reserve(2 * static_cast<std::size_t>(n) + 3);
  for (int j = 0; j <= n; ++j) {
    // (n-j) pi Q(a) - j (1-pi) Q(b) + sum_{k<=j} (j-k) B(k) >= rhs
    if (system != System::Monotone) {
      Rational constant = 0;
      for (int k = 0; k <= j; ++k) constant += (j - k) * prior.mass(k);
      if (system == System::Unanimous) constant -= j * prior.lambda(0) + (n - j) * prior.lambda(n);
      out.push_back({{system, Family::Lower, j}, (n - j) * pi, -j * rest, constant});
    }
    // j (1-pi) Q(b) - (n-j) pi Q(a) + sum_{k>=j} (k-j) B(k) >= 0
    Rational constant = 0;
    for (int k = j; k <= n; ++k) constant += (k - j) * prior.mass(k);
    out.push_back({{system, Family::Upper, j}, -(n - j) * pi, j * rest, constant});
  }
  if (system == System::Monotone) out.push_back({{system, Family::Order, 0}, 1, -1, 0});
  return out;
}

FeasibilityReport check(System system, const ReducedForm& q_in, const ExchangeablePrior& prior) {
  const ReducedForm q = canonical(q_in);
  FeasibilityReport report;
  report.system = system;
  report.feasible = true;
  for (const auto& c : constraint_system(system, prior)) {
    Rational s = c.slack(q);
    const int sign = sgn(s);
    if (sign < 0) report.feasible = false;
    if (sign == 0) report.binding.push_back(c.id);
    report.slacks.push_back({c.id, std::move(s)});
  }
  return report;
}

FeasibilityReport check_implementable(const ReducedForm& q, const ExchangeablePrior& prior) {
  return check(System::General, q, prior);
}

FeasibilityReport check_monotone_implementable(const ReducedForm& q, const ExchangeablePrior& prior) {
  return check(System::Monotone, q, prior);
}

FeasibilityReport check_u_implementable(const ReducedForm& q, const ExchangeablePrior& prior) {
  return check(System::Unanimous, q, prior);
}

}  // namespace rfvote
