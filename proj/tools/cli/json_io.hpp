#pragma once

#include <json.hpp>

#include "rfvote/decomposition.hpp"
#include "rfvote/prior.hpp"
#include "rfvote/rational.hpp"
#include "rfvote/rules.hpp"

namespace rfvote::io {

using Json = nlohmann::ordered_json;

/// Accepts "p/q" or decimal strings and JSON integers. JSON floating-point
/// numbers are rejected: their exact value is not what was written.
Rational rational_from_json(const Json& value);
Json rational_to_json(const Rational& value);

/// {"n": 3, "lambda": ["1/8", ...]} or {"n": 3, "independent_pi": "1/2"}.
ExchangeablePrior prior_from_json(const Json& doc);
Json prior_to_json(const ExchangeablePrior& prior);

/// {"q": ["0", "1", ...]} or {"family": "qualified_majority", "quota": 2};
/// the quota form needs n.
SymmetricRule rule_from_json(const Json& doc, int n);
Json rule_to_json(const SymmetricRule& rule);

/// {"qa": "...", "qb": "...", "qa_decimal": "...", "qb_decimal": "..."}.
Json reduced_form_to_json(const ReducedForm& q);

}  // namespace rfvote::io
