#include "rfvote/decomposition.hpp"

#include <string>
#include <utility>

#include "rfvote/errors.hpp"
#include "rfvote/geometry.hpp"

namespace rfvote {

namespace {

geometry::Point as_point(const ReducedForm& q) { return {q.qa, q.qb}; }

std::vector<geometry::Point> polygon_of(const VertexSet& set) {
  std::vector<geometry::Point> out;
  out.reserve(set.vertices.size());
  for (const auto& v : set.vertices) out.push_back(as_point(v.point));
  return out;
}

std::vector<QuotaRule> candidates(int n, RuleClass rule_class) {
  std::vector<QuotaRule> out;
  switch (rule_class) {
    case RuleClass::All:
      for (int j = 0; j <= n; ++j) out.push_back({QuotaFamily::QualifiedMajority, j});
      for (int j = 0; j <= n; ++j) out.push_back({QuotaFamily::QualifiedAntiMajority, j});
      break;
    case RuleClass::Monotone:
      for (int j = 0; j <= n; ++j) out.push_back({QuotaFamily::QualifiedMajority, j});
      out.push_back({QuotaFamily::QualifiedAntiMajority, 0});
      break;
    case RuleClass::Unanimous:
      for (int j = 1; j <= n; ++j) out.push_back({QuotaFamily::UQualifiedMajority, j});
      for (int j = 1; j <= n; ++j) out.push_back({QuotaFamily::UQualifiedAntiMajority, j});
      break;
  }
  return out;
}

}  // namespace

std::string_view to_string(RuleClass rule_class) {
  switch (rule_class) {
    case RuleClass::All: return "all";
    case RuleClass::Monotone: return "monotone";
    case RuleClass::Unanimous: return "unanimous";
  }
  return "unknown";
}

RuleClass parse_rule_class(std::string_view name) {
  for (auto c : {RuleClass::All, RuleClass::Monotone, RuleClass::Unanimous}) {
    if (to_string(c) == name) return c;
  }
  throw ParseError("unknown rule class '" + std::string(name) + "'");
}

System system_for(RuleClass rule_class) {
  switch (rule_class) {
    case RuleClass::All: return System::General;
    case RuleClass::Monotone: return System::Monotone;
    case RuleClass::Unanimous: return System::Unanimous;
  }
  return System::General;
}

bool VertexSet::contains(const ReducedForm& q_in) const {
  const ReducedForm q = canonical(q_in);
  const auto polygon = polygon_of(*this);
  return geometry::polygon_contains(polygon, as_point(q));
}

ReducedForm Decomposition::combine(const VertexSet& set) const {
  ReducedForm sum{0, 0};
  for (const auto& part : parts) {
    const ReducedForm& p = set.vertices.at(part.vertex).point;
    sum.qa += part.weight * p.qa;
    sum.qb += part.weight * p.qb;
  }
  return sum;
}

VertexSet vertices(const ExchangeablePrior& prior, RuleClass rule_class) {
  const int n = prior.n();
  std::vector<Vertex> all;
  std::vector<geometry::Point> points;
  for (const QuotaRule& rule : candidates(n, rule_class)) {
    ReducedForm q = reduced_form(to_rule(rule, n), prior);
    points.push_back(as_point(q));
    all.push_back({rule, std::move(q)});
  }
  VertexSet set;
  set.rule_class = rule_class;
  for (std::size_t i : geometry::convex_hull(points)) set.vertices.push_back(std::move(all[i]));
  return set;
}

Decomposition decompose(const ReducedForm& q_in, const VertexSet& set) {
  const ReducedForm q = canonical(q_in);
  const auto polygon = polygon_of(set);
  const geometry::Point p = as_point(q);
  const auto outside = [&] {
    return InfeasibleError("(" + to_exact_string(q.qa) + ", " + to_exact_string(q.qb) + ") is outside the " +
                           std::string(to_string(set.rule_class)) + " polytope");
  };

  Decomposition d;
  if (polygon.size() == 1) {
    if (!(polygon[0] == p)) throw outside();
    d.parts.push_back({0, 1});
    return d;
  }
  if (polygon.size() == 2) {
    auto t = geometry::segment_parameter(polygon[0], polygon[1], p);
    if (!t) throw outside();
    if (sgn(1 - *t) > 0) d.parts.push_back({0, 1 - *t});
    if (sgn(*t) > 0) d.parts.push_back({1, *t});
    return d;
  }
  for (std::size_t i = 1; i + 1 < polygon.size(); ++i) {
    auto w = geometry::barycentric(polygon[0], polygon[i], polygon[i + 1], p);
    if (sgn(w[0]) < 0 || sgn(w[1]) < 0 || sgn(w[2]) < 0) continue;
    const std::size_t index[3] = {0, i, i + 1};
    for (int k = 0; k < 3; ++k) {
      if (sgn(w[k]) > 0) d.parts.push_back({index[k], std::move(w[k])});
    }
    return d;
  }
  throw outside();
}

Decomposition decompose(const ReducedForm& q, const ExchangeablePrior& prior, RuleClass rule_class) {
  return decompose(q, vertices(prior, rule_class));
}

Synthesis synthesize(const ReducedForm& q, const ExchangeablePrior& prior, RuleClass rule_class) {
  VertexSet set = vertices(prior, rule_class);
  Decomposition d = decompose(q, set);
  const int n = prior.n();
  std::vector<Rational> mix(static_cast<std::size_t>(n) + 1, Rational(0));
  for (const auto& part : d.parts) {
    const SymmetricRule r = to_rule(set.vertices[part.vertex].rule, n);
    for (int k = 0; k <= n; ++k) mix[static_cast<std::size_t>(k)] += part.weight * r[k];
  }
  SymmetricRule rule(std::move(mix));
  return {std::move(set), std::move(d), std::move(rule)};
}

SymmetricRule synthesize_rule(const ReducedForm& q, const ExchangeablePrior& prior, RuleClass rule_class) {
  return synthesize(q, prior, rule_class).rule;
}

}  // namespace rfvote
