#pragma once

#include <stdexcept>
#include <string>

namespace skq {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A feature name does not resolve against the schema.
class UnknownFeature : public Error {
 public:
  explicit UnknownFeature(const std::string& name)
      : Error("unknown feature: " + name), feature(name) {}
  std::string feature;
};

/// Schema construction or cross-validation failure.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Parsed theory disagrees with the supplied schema hint.
class SchemaMismatch : public Error {
 public:
  using Error::Error;
};

/// A clause's variable output is never bound by an `is` literal.
class UnboundOutput : public Error {
 public:
  using Error::Error;
};

/// Unique-match prediction found >= 2 matching rules with different outputs.
class AmbiguousMatch : public Error {
 public:
  using Error::Error;
};

/// Literal kind with no closed-form complement (fuzzy, some m-of-n).
class NonComplementableLiteral : public Error {
 public:
  using Error::Error;
};

/// A precondition literal cannot be mapped to an axis-parallel region.
class UnsupportedLiteral : public Error {
 public:
  using Error::Error;
};

/// ordered_to_unordered would exceed the configured region budget.
class RegionBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Metric computation got no covered (prediction, target) pair.
class AllUncovered : public Error {
 public:
  using Error::Error;
};

/// R^2 requested against constant targets.
class ZeroVariance : public Error {
 public:
  using Error::Error;
};

/// Grid sampling request exceeds the point budget.
class SampleBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Least-squares design matrix is rank deficient.
class SingularDesign : public Error {
 public:
  using Error::Error;
};

/// Extraction attempted on an empty sample set.
class NoSamples : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace skq
