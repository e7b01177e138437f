#include "skq/schema.hpp"

#include <unordered_set>

namespace skq {

FeatureSchema::FeatureSchema(std::vector<Feature> inputs, Feature output, std::string functor)
    : inputs_(std::move(inputs)), output_(std::move(output)), functor_(std::move(functor)) {
  if (inputs_.empty()) throw SchemaError("schema needs at least one input feature");
  if (functor_.empty()) throw SchemaError("schema functor name is empty");
  std::unordered_set<std::string> seen;
  for (const Feature& f : inputs_) {
    if (f.name.empty()) throw SchemaError("empty feature name");
    if (!seen.insert(f.name).second) throw SchemaError("duplicate feature name: " + f.name);
  }
  if (output_.name.empty()) throw SchemaError("empty output feature name");
  if (seen.count(output_.name))
    throw SchemaError("output feature name collides with input: " + output_.name);
}

std::optional<std::size_t> FeatureSchema::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < inputs_.size(); ++i)
    if (inputs_[i].name == name) return i;
  return std::nullopt;
}

std::size_t FeatureSchema::require(const std::string& name) const {
  if (auto i = index_of(name)) return *i;
  throw UnknownFeature(name);
}

bool FeatureSchema::same_features(const FeatureSchema& other) const {
  if (inputs_.size() != other.inputs_.size()) return false;
  for (std::size_t i = 0; i < inputs_.size(); ++i)
    if (inputs_[i].name != other.inputs_[i].name || inputs_[i].kind != other.inputs_[i].kind)
      return false;
  return output_.name == other.output_.name && output_.kind == other.output_.kind;
}

}  // namespace skq
