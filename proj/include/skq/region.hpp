#pragma once

#include <limits>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "skq/literal.hpp"
#include "skq/schema.hpp"

namespace skq {

/// One continuous dimension of a region: an interval with independently
/// open/closed finite ends (infinite ends are open by convention).
struct DimInterval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_closed = false;
  bool hi_closed = false;

  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
  bool unbounded_lo() const { return lo == -std::numeric_limits<double>::infinity(); }
  bool unbounded_hi() const { return hi == std::numeric_limits<double>::infinity(); }
  bool contains(double x) const;

  static DimInterval all() { return {}; }
  static DimInterval closed(double lo, double hi) { return {lo, hi, true, true}; }
};

/// One categorical dimension: the set of allowed category labels.
struct DimCategories {
  std::set<std::string> allowed;
  bool empty() const { return allowed.empty(); }
  bool contains(const std::string& v) const { return allowed.count(v) != 0; }
};

using DimConstraint = std::variant<DimInterval, DimCategories>;

/// Axis-parallel region: per input feature an interval or a category set,
/// aligned with the schema's input order. Membership is the conjunction of
/// the per-dimension memberships.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<DimConstraint> dims) : dims_(std::move(dims)) {}

  /// The whole space for a schema: unbounded intervals on continuous
  /// dimensions, `universe` labels on categorical ones (empty set allowed
  /// only if no categorical feature exists).
  static Region whole_space(const FeatureSchema& schema);

  std::size_t size() const { return dims_.size(); }
  const DimConstraint& dim(std::size_t i) const { return dims_[i]; }
  DimConstraint& dim(std::size_t i) { return dims_[i]; }
  const std::vector<DimConstraint>& dims() const { return dims_; }

  bool empty() const;
  bool contains(const Instance& x) const;

 private:
  std::vector<DimConstraint> dims_;
};

/// Intersection; result may be empty.
Region intersect(const Region& a, const Region& b);

bool regions_overlap(const Region& a, const Region& b);

/// a minus b as pairwise-disjoint pieces whose union is exactly a \ b.
/// At most two pieces per continuous dimension plus one per categorical
/// dimension; the empty list means a is contained in b.
std::vector<Region> subtract_regions(const Region& a, const Region& b);

/// Product of interval widths and category counts. Only meaningful for
/// regions bounded on every continuous dimension.
double region_measure(const Region& r);

/// Builds the region of a conjunction of axis-parallel literals, starting
/// from `bounds` (which also supplies the category universe for negative
/// set constraints). Throws UnsupportedLiteral for kinds with no region
/// form (m-of-n, fuzzy, oblique, continuous disequality).
Region region_of_precondition(const std::vector<Literal>& precondition,
                              const FeatureSchema& schema, const Region& bounds);

/// Renders a region back into literals, omitting dimensions equal to the
/// corresponding `bounds` dimension.
std::vector<Literal> region_to_literals(const Region& r, const FeatureSchema& schema,
                                        const Region& bounds);

}  // namespace skq
