#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "rfvote/feasibility.hpp"
#include "rfvote/prior.hpp"
#include "rfvote/rational.hpp"
#include "rfvote/rules.hpp"

namespace rfvote {

/// Which family of rules generates the polytope.
enum class RuleClass { All, Monotone, Unanimous };

std::string_view to_string(RuleClass rule_class);
RuleClass parse_rule_class(std::string_view name);
System system_for(RuleClass rule_class);

struct Vertex {
  QuotaRule rule;
  ReducedForm point;
};

/// Extreme points of a reduced-form polytope, counterclockwise in the
/// (Q(a), Q(b)) plane, starting from the vertex with the smallest Q(b)
/// (ties: smallest Q(a)). For the All and Monotone classes this is (0, 0).
struct VertexSet {
  RuleClass rule_class = RuleClass::All;
  std::vector<Vertex> vertices;

  /// Boundary-inclusive hull membership by cross-product signs.
  bool contains(const ReducedForm& q) const;
};

/// Carathéodory certificate: at most three vertices with positive weights
/// summing to one.
struct Decomposition {
  struct Part {
    std::size_t vertex;
    Rational weight;
  };
  std::vector<Part> parts;

  ReducedForm combine(const VertexSet& set) const;
};

/// Candidate generation per class:
///   All:       majority and anti-majority, quotas 0..n (constants included);
///   Monotone:  majority quotas 0..n and the constant-b rule;
///   Unanimous: u-majority and u-anti-majority, quotas 1..n.
/// Candidates with equal reduced forms are merged keeping the first
/// (majority before anti-majority, lower quota first); points that are not
/// strictly extreme are dropped.
VertexSet vertices(const ExchangeablePrior& prior, RuleClass rule_class);

/// Fan-triangulates the vertex polygon from vertex 0 and returns the exact
/// barycentric weights of the first triangle containing q. Zero weights are
/// dropped, so edges yield two parts and vertices one.
/// Throws InfeasibleError when q lies outside the polygon.
Decomposition decompose(const ReducedForm& q, const VertexSet& set);
Decomposition decompose(const ReducedForm& q, const ExchangeablePrior& prior, RuleClass rule_class);

struct Synthesis {
  VertexSet vertex_set;
  Decomposition decomposition;
  SymmetricRule rule;
};

/// Builds an ex-post rule whose reduced form is exactly q, as the weighted
/// mixture of the certificate's vertex rules. Many rules can share a reduced
/// form; this returns the mixture. Throws InfeasibleError.
Synthesis synthesize(const ReducedForm& q, const ExchangeablePrior& prior, RuleClass rule_class);
SymmetricRule synthesize_rule(const ReducedForm& q, const ExchangeablePrior& prior, RuleClass rule_class);

}  // namespace rfvote
