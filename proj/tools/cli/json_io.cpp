#include "cli/json_io.hpp"

#include <string>
#include <vector>

#include "rfvote/errors.hpp"

namespace rfvote::io {

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(Integer(value.dump()));
  if (value.is_number_float()) {
    throw ParseError("rational given as JSON float " + value.dump() + "; quote it as a string, e.g. \"0.3\"");
  }
  throw ParseError("expected a rational string, got " + value.dump());
}

Json rational_to_json(const Rational& value) { return to_exact_string(value); }

ExchangeablePrior prior_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n")) throw ParseError("prior must be an object with \"n\"");
  if (!doc["n"].is_number_integer()) throw ParseError("prior \"n\" must be an integer");
  const int n = doc["n"].get<int>();
  const bool has_lambda = doc.contains("lambda");
  const bool has_pi = doc.contains("independent_pi");
  if (has_lambda == has_pi) throw ParseError("prior needs exactly one of \"lambda\" or \"independent_pi\"");
  if (has_pi) return ExchangeablePrior::independent(n, rational_from_json(doc["independent_pi"]));
  if (!doc["lambda"].is_array()) throw ParseError("\"lambda\" must be an array");
  std::vector<Rational> lambda;
  for (const auto& entry : doc["lambda"]) lambda.push_back(rational_from_json(entry));
  return ExchangeablePrior::from_lambda(n, std::move(lambda));
}

Json prior_to_json(const ExchangeablePrior& prior) {
  Json doc;
  doc["n"] = prior.n();
  Json lambda = Json::array();
  for (const auto& l : prior.lambda()) lambda.push_back(rational_to_json(l));
  doc["lambda"] = std::move(lambda);
  return doc;
}

SymmetricRule rule_from_json(const Json& doc, int n) {
  if (!doc.is_object()) throw ParseError("rule must be a JSON object");
  if (doc.contains("q")) {
    if (!doc["q"].is_array()) throw ParseError("\"q\" must be an array");
    std::vector<Rational> q;
    for (const auto& entry : doc["q"]) q.push_back(rational_from_json(entry));
    if (static_cast<int>(q.size()) != n + 1) {
      throw DimensionError("rule has " + std::to_string(q.size()) + " entries, expected " + std::to_string(n + 1));
    }
    return SymmetricRule(std::move(q));
  }
  if (doc.contains("family") && doc.contains("quota")) {
    if (!doc["family"].is_string() || !doc["quota"].is_number_integer()) {
      throw ParseError("quota rule needs a string \"family\" and an integer \"quota\"");
    }
    return quota_rule(parse_quota_family(doc["family"].get<std::string>()), doc["quota"].get<int>(), n);
  }
  throw ParseError("rule needs \"q\" or \"family\" + \"quota\"");
}

Json rule_to_json(const SymmetricRule& rule) {
  Json q = Json::array();
  for (const auto& entry : rule.q()) q.push_back(rational_to_json(entry));
  Json doc;
  doc["q"] = std::move(q);
  return doc;
}

Json reduced_form_to_json(const ReducedForm& q) {
  Json doc;
  doc["qa"] = to_exact_string(q.qa);
  doc["qb"] = to_exact_string(q.qb);
  doc["qa_decimal"] = to_decimal_string(q.qa);
  doc["qb_decimal"] = to_decimal_string(q.qb);
  return doc;
}

}  // namespace rfvote::io
