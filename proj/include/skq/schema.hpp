#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skq/errors.hpp"

namespace skq {

/// A feature value: a number for continuous features, a category label
/// for categorical ones.
using Value = std::variant<double, std::string>;

inline bool is_number(const Value& v) { return std::holds_alternative<double>(v); }
inline double as_number(const Value& v) { return std::get<double>(v); }
inline const std::string& as_category(const Value& v) { return std::get<std::string>(v); }

/// Value equality: numbers compare numerically, categories by exact string.
inline bool value_equal(const Value& a, const Value& b) {
  if (is_number(a) != is_number(b)) return false;
  return is_number(a) ? as_number(a) == as_number(b) : as_category(a) == as_category(b);
}

enum class FeatureKind { Continuous, Categorical };

struct Feature {
  std::string name;
  FeatureKind kind = FeatureKind::Continuous;
};

/// The feature space a knowledge base and its instances live in: an ordered
/// list of input features plus one output feature, and the functor used as
/// the clause head when the knowledge is written down.
class FeatureSchema {
 public:
  FeatureSchema() = default;
  FeatureSchema(std::vector<Feature> inputs, Feature output, std::string functor);

  const std::vector<Feature>& inputs() const { return inputs_; }
  const Feature& output() const { return output_; }
  const std::string& functor() const { return functor_; }
  std::size_t arity() const { return inputs_.size(); }

  /// Index of an input feature, or nullopt if the name is not an input.
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Index of an input feature; throws UnknownFeature otherwise.
  std::size_t require(const std::string& name) const;

  bool same_features(const FeatureSchema& other) const;

 private:
  std::vector<Feature> inputs_;
  Feature output_;
  std::string functor_ = "f";
};

/// One input point, values aligned with FeatureSchema::inputs(). Total over
/// the input features: no missing values.
struct Instance {
  std::vector<Value> values;

  const Value& operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const { return values.size(); }
};

using OutputValue = Value;

}  // namespace skq
