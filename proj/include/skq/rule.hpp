#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "skq/literal.hpp"
#include "skq/schema.hpp"

namespace skq {

struct ConstantClass {
  std::string label;
};

struct ConstantValue {
  double value = 0;
};

/// intercept + sum coeff * feature. Coefficients keep insertion order for
/// rendering; zero coefficients are dropped at construction.
struct LinearExpr {
  double intercept = 0;
  std::vector<std::pair<std::string, double>> coefficients;
};

using Postcondition = std::variant<ConstantClass, ConstantValue, LinearExpr>;

bool postcondition_equal(const Postcondition& a, const Postcondition& b);

/// Rule = conjunction of literals -> postcondition. An empty precondition is
/// always true. Rules flagged unsatisfiable (empty precondition intersection
/// found by simplification) never match but still count as rules.
struct Rule {
  std::vector<Literal> precondition;
  Postcondition postcondition;
  bool unsatisfiable = false;
};

enum class Ordering { Ordered, Unordered };

/// An ordered or unordered list of rules over one schema; the unit the
/// quality indicators are computed for.
struct KnowledgeBase {
  FeatureSchema schema;
  std::vector<Rule> rules;
  Ordering ordering = Ordering::Ordered;
  std::string provenance;

  void validate() const;  // throws SchemaError / UnknownFeature
};

enum class MatchPolicy { FirstMatch, Unique, Confidence };

OutputValue evaluate_postcondition(const Postcondition& post, const Instance& x,
                                   const FeatureSchema& schema);

bool rule_matches(const Rule& r, const Instance& x, const FeatureSchema& schema,
                  const FuzzyTable* fuzzy = nullptr);

/// Product of literal degrees for a matching rule; 1 for crisp matches.
double rule_confidence(const Rule& r, const Instance& x, const FeatureSchema& schema,
                       const FuzzyTable* fuzzy = nullptr);

/// Predicts the output for one instance, or nullopt when no rule matches.
/// Ordered knowledge uses first-match; unordered knowledge resolves overlap
/// via the policy: `Unique` throws AmbiguousMatch on conflicting matches,
/// `Confidence` takes the highest degree product (ties to the lowest index).
std::optional<OutputValue> predict(const KnowledgeBase& kb, const Instance& x,
                                   MatchPolicy policy = MatchPolicy::FirstMatch,
                                   const FuzzyTable* fuzzy = nullptr);

}  // namespace skq
