#include "skq/rule.hpp"

#include <cmath>

#include "skq/errors.hpp"

namespace skq {

bool postcondition_equal(const Postcondition& a, const Postcondition& b) {
  if (a.index() != b.index()) return false;
  if (auto* ca = std::get_if<ConstantClass>(&a))
    return ca->label == std::get<ConstantClass>(b).label;
  if (auto* cv = std::get_if<ConstantValue>(&a))
    return cv->value == std::get<ConstantValue>(b).value;
  const auto& la = std::get<LinearExpr>(a);
  const auto& lb = std::get<LinearExpr>(b);
  return la.intercept == lb.intercept && la.coefficients == lb.coefficients;
}

void KnowledgeBase::validate() const {
  if (rules.empty()) throw SchemaError("knowledge base has no rules");
  std::vector<std::string> features;
  for (const Rule& r : rules) {
    features.clear();
    for (const Literal& lit : r.precondition) collect_features(lit, features);
    if (auto* lin = std::get_if<LinearExpr>(&r.postcondition))
      for (const auto& [name, coeff] : lin->coefficients) features.push_back(name);
    for (const std::string& name : features) schema.require(name);
    if (std::holds_alternative<ConstantClass>(r.postcondition) &&
        schema.output().kind != FeatureKind::Categorical)
      throw SchemaError("class postcondition on a continuous output");
    for (std::size_t i = 0; i < r.precondition.size(); ++i)
      for (std::size_t j = i + 1; j < r.precondition.size(); ++j)
        if (r.precondition[i] == r.precondition[j])
          throw SchemaError("duplicate literal in one precondition");
  }
}

OutputValue evaluate_postcondition(const Postcondition& post, const Instance& x,
                                   const FeatureSchema& schema) {
  if (auto* c = std::get_if<ConstantClass>(&post)) return c->label;
  if (auto* v = std::get_if<ConstantValue>(&post)) return v->value;
  const auto& lin = std::get<LinearExpr>(post);
  double sum = lin.intercept;
  for (const auto& [name, coeff] : lin.coefficients)
    sum += coeff * as_number(x[schema.require(name)]);
  return sum;
}

bool rule_matches(const Rule& r, const Instance& x, const FeatureSchema& schema,
                  const FuzzyTable* fuzzy) {
  if (r.unsatisfiable) return false;
  for (const Literal& lit : r.precondition)
    if (!evaluate_literal(lit, x, schema, fuzzy).satisfied) return false;
  return true;
}

double rule_confidence(const Rule& r, const Instance& x, const FeatureSchema& schema,
                       const FuzzyTable* fuzzy) {
  double product = 1.0;
  for (const Literal& lit : r.precondition) product *= evaluate_literal(lit, x, schema, fuzzy).degree;
  return product;
}

std::optional<OutputValue> predict(const KnowledgeBase& kb, const Instance& x, MatchPolicy policy,
                                   const FuzzyTable* fuzzy) {
  if (kb.ordering == Ordering::Ordered || policy == MatchPolicy::FirstMatch) {
    for (const Rule& r : kb.rules)
      if (rule_matches(r, x, kb.schema, fuzzy))
        return evaluate_postcondition(r.postcondition, x, kb.schema);
    return std::nullopt;
  }
  if (policy == MatchPolicy::Unique) {
    std::optional<OutputValue> found;
    for (const Rule& r : kb.rules) {
      if (!rule_matches(r, x, kb.schema, fuzzy)) continue;
      OutputValue out = evaluate_postcondition(r.postcondition, x, kb.schema);
      if (found && !value_equal(*found, out))
        throw AmbiguousMatch("overlapping rules with conflicting outputs");
      found = std::move(out);
    }
    return found;
  }
  // Confidence: highest degree product wins, ties to the lowest rule index.
  std::optional<OutputValue> best;
  double best_degree = -1.0;
  for (const Rule& r : kb.rules) {
    if (!rule_matches(r, x, kb.schema, fuzzy)) continue;
    const double degree = rule_confidence(r, x, kb.schema, fuzzy);
    if (degree > best_degree) {
      best_degree = degree;
      best = evaluate_postcondition(r.postcondition, x, kb.schema);
    }
  }
  return best;
}

}  // namespace skq
