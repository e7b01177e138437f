#include "skq/region.hpp"

#include <algorithm>
#include <cmath>

#include "skq/errors.hpp"

namespace skq {

bool DimInterval::contains(double x) const {
  if (x < lo || (x == lo && !lo_closed)) return false;
  if (x > hi || (x == hi && !hi_closed)) return false;
  return true;
}

Region Region::whole_space(const FeatureSchema& schema) {
  std::vector<DimConstraint> dims;
  dims.reserve(schema.inputs().size());
  for (const Feature& f : schema.inputs()) {
    if (f.kind == FeatureKind::Continuous)
      dims.emplace_back(DimInterval::all());
    else
      dims.emplace_back(DimCategories{});
  }
  return Region(std::move(dims));
}

bool Region::empty() const {
  for (const DimConstraint& d : dims_) {
    if (auto* iv = std::get_if<DimInterval>(&d)) {
      if (iv->empty()) return true;
    } else if (std::get<DimCategories>(d).empty()) {
      return true;
    }
  }
  return false;
}

bool Region::contains(const Instance& x) const {
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (auto* iv = std::get_if<DimInterval>(&dims_[i])) {
      if (!iv->contains(as_number(x[i]))) return false;
    } else if (!std::get<DimCategories>(dims_[i]).contains(as_category(x[i]))) {
      return false;
    }
  }
  return true;
}

namespace {

DimInterval intersect_dim(const DimInterval& a, const DimInterval& b) {
  DimInterval out;
  if (a.lo > b.lo) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    out.lo = b.lo;
    out.lo_closed = b.lo_closed;
  } else {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed;
  } else {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed && b.hi_closed;
  }
  return out;
}

DimCategories intersect_dim(const DimCategories& a, const DimCategories& b) {
  DimCategories out;
  std::set_intersection(a.allowed.begin(), a.allowed.end(), b.allowed.begin(), b.allowed.end(),
                        std::inserter(out.allowed, out.allowed.begin()));
  return out;
}

}  // namespace

Region intersect(const Region& a, const Region& b) {
  std::vector<DimConstraint> dims;
  dims.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto* ia = std::get_if<DimInterval>(&a.dim(i)))
      dims.emplace_back(intersect_dim(*ia, std::get<DimInterval>(b.dim(i))));
    else
      dims.emplace_back(
          intersect_dim(std::get<DimCategories>(a.dim(i)), std::get<DimCategories>(b.dim(i))));
  }
  return Region(std::move(dims));
}

bool regions_overlap(const Region& a, const Region& b) { return !intersect(a, b).empty(); }

std::vector<Region> subtract_regions(const Region& a, const Region& b) {
  if (a.empty()) return {};
  const Region core = intersect(a, b);
  if (core.empty()) return {a};

  std::vector<Region> pieces;
  Region current = a;
  for (std::size_t d = 0; d < a.size(); ++d) {
    if (auto* cur = std::get_if<DimInterval>(&current.dim(d))) {
      const DimInterval& inner = std::get<DimInterval>(core.dim(d));
      // Slice below the core interval; open/closed flips keep the pieces
      // exactly complementary (no gap, no overlap at the shared endpoint).
      DimInterval below{cur->lo, inner.lo, cur->lo_closed, !inner.lo_closed};
      if (!below.empty()) {
        Region piece = current;
        piece.dim(d) = below;
        pieces.push_back(std::move(piece));
      }
      DimInterval above{inner.hi, cur->hi, !inner.hi_closed, cur->hi_closed};
      if (!above.empty()) {
        Region piece = current;
        piece.dim(d) = above;
        pieces.push_back(std::move(piece));
      }
      current.dim(d) = inner;
    } else {
      const DimCategories& cur_cat = std::get<DimCategories>(current.dim(d));
      const DimCategories& inner = std::get<DimCategories>(core.dim(d));
      DimCategories rest;
      std::set_difference(cur_cat.allowed.begin(), cur_cat.allowed.end(), inner.allowed.begin(),
                          inner.allowed.end(), std::inserter(rest.allowed, rest.allowed.begin()));
      if (!rest.empty()) {
        Region piece = current;
        piece.dim(d) = rest;
        if (!piece.empty()) pieces.push_back(std::move(piece));
      }
      current.dim(d) = inner;
    }
  }
  return pieces;
}

double region_measure(const Region& r) {
  if (r.empty()) return 0.0;
  double m = 1.0;
  for (const DimConstraint& d : r.dims()) {
    if (auto* iv = std::get_if<DimInterval>(&d))
      m *= iv->hi - iv->lo;
    else
      m *= static_cast<double>(std::get<DimCategories>(d).allowed.size());
  }
  return m;
}

namespace {

void apply_comparison(Region& region, const FeatureSchema& schema, const Comparison& cmp,
                      const Region& bounds) {
  const std::size_t i = schema.require(cmp.feature);
  if (is_number(cmp.constant)) {
    auto& iv = std::get<DimInterval>(region.dim(i));
    const double c = as_number(cmp.constant);
    switch (cmp.op) {
      case CmpOp::Lt: iv = intersect_dim(iv, {-INFINITY, c, false, false}); break;
      case CmpOp::Le: iv = intersect_dim(iv, {-INFINITY, c, false, true}); break;
      case CmpOp::Gt: iv = intersect_dim(iv, {c, INFINITY, false, false}); break;
      case CmpOp::Ge: iv = intersect_dim(iv, {c, INFINITY, true, false}); break;
      case CmpOp::Eq: iv = intersect_dim(iv, DimInterval::closed(c, c)); break;
      case CmpOp::Neq:
        throw UnsupportedLiteral("continuous disequality has no region form");
    }
  } else {
    auto& cat = std::get<DimCategories>(region.dim(i));
    const std::string& label = as_category(cmp.constant);
    if (cmp.op == CmpOp::Eq) {
      DimCategories single;
      if (cat.contains(label)) single.allowed.insert(label);
      cat = single;
    } else if (cmp.op == CmpOp::Neq) {
      cat.allowed.erase(label);
      (void)bounds;
    } else {
      throw UnsupportedLiteral("ordering comparison on categorical feature");
    }
  }
}

}  // namespace

Region region_of_precondition(const std::vector<Literal>& precondition,
                              const FeatureSchema& schema, const Region& bounds) {
  Region region = bounds;
  for (const Literal& lit : precondition) {
    if (auto* cmp = lit.get_if<Comparison>()) {
      apply_comparison(region, schema, *cmp, bounds);
    } else if (auto* iv = lit.get_if<Interval>()) {
      const std::size_t i = schema.require(iv->feature);
      auto& dim = std::get<DimInterval>(region.dim(i));
      dim = intersect_dim(dim, DimInterval::closed(iv->low, iv->high));
    } else if (auto* set = lit.get_if<SetMembership>()) {
      const std::size_t i = schema.require(set->feature);
      auto& cat = std::get<DimCategories>(region.dim(i));
      DimCategories filter;
      if (set->polarity == SetPolarity::In) {
        for (const std::string& v : set->values)
          if (cat.contains(v)) filter.allowed.insert(v);
        cat = filter;
      } else {
        for (const std::string& v : set->values) cat.allowed.erase(v);
      }
    } else {
      throw UnsupportedLiteral("literal kind has no axis-parallel region form");
    }
  }
  return region;
}

namespace {

bool same_dim(const DimConstraint& a, const DimConstraint& b) {
  if (auto* ia = std::get_if<DimInterval>(&a)) {
    const auto& ib = std::get<DimInterval>(b);
    return ia->lo == ib.lo && ia->hi == ib.hi && ia->lo_closed == ib.lo_closed &&
           ia->hi_closed == ib.hi_closed;
  }
  return std::get<DimCategories>(a).allowed == std::get<DimCategories>(b).allowed;
}

}  // namespace

std::vector<Literal> region_to_literals(const Region& r, const FeatureSchema& schema,
                                        const Region& bounds) {
  std::vector<Literal> literals;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (same_dim(r.dim(i), bounds.dim(i))) continue;
    const std::string& name = schema.inputs()[i].name;
    if (auto* iv = std::get_if<DimInterval>(&r.dim(i))) {
      const auto& bd = std::get<DimInterval>(bounds.dim(i));
      const bool lo_tight =
          !iv->unbounded_lo() && !(iv->lo == bd.lo && iv->lo_closed == bd.lo_closed);
      const bool hi_tight =
          !iv->unbounded_hi() && !(iv->hi == bd.hi && iv->hi_closed == bd.hi_closed);
      if (lo_tight && hi_tight && iv->lo == iv->hi) {
        literals.push_back(Literal::comparison(name, CmpOp::Eq, iv->lo));
        continue;
      }
      if (lo_tight && hi_tight && iv->lo_closed && iv->hi_closed) {
        literals.push_back(Literal::interval(name, iv->lo, iv->hi));
        continue;
      }
      if (lo_tight)
        literals.push_back(
            Literal::comparison(name, iv->lo_closed ? CmpOp::Ge : CmpOp::Gt, iv->lo));
      if (hi_tight)
        literals.push_back(
            Literal::comparison(name, iv->hi_closed ? CmpOp::Le : CmpOp::Lt, iv->hi));
    } else {
      const auto& cat = std::get<DimCategories>(r.dim(i));
      if (cat.allowed.size() == 1) {
        literals.push_back(Literal::comparison(name, CmpOp::Eq, *cat.allowed.begin()));
      } else {
        literals.push_back(Literal::set_membership(
            name, {cat.allowed.begin(), cat.allowed.end()}, SetPolarity::In));
      }
    }
  }
  return literals;
}

}  // namespace skq
