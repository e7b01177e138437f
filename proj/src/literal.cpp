#include "skq/literal.hpp"

#include <algorithm>
#include <cmath>

#include "skq/errors.hpp"

namespace skq {

const char* cmp_op_text(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Neq: return "\\=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "=<";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

double FuzzyTable::Trapezoid::membership(double x) const {
  if (x < a || x > d) return 0.0;
  if (x >= b && x <= c) return 1.0;
  if (x < b) return (x - a) / (b - a);  // a < b here, else x would be in [b,c]
  return (d - x) / (d - c);
}

FuzzyTable::FuzzyTable(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error("fuzzy alpha must be in (0, 1]");
}

void FuzzyTable::define(const std::string& feature, const std::string& label, Trapezoid t) {
  if (!(t.a <= t.b && t.b <= t.c && t.c <= t.d))
    throw Error("trapezoid breakpoints must satisfy a <= b <= c <= d");
  table_[{feature, label}] = t;
}

const FuzzyTable::Trapezoid* FuzzyTable::find(const std::string& feature,
                                              const std::string& label) const {
  auto it = table_.find({feature, label});
  return it == table_.end() ? nullptr : &it->second;
}

Literal Literal::comparison(std::string feature, CmpOp op, Value constant) {
  if (feature.empty()) throw Error("comparison needs a feature name");
  if (!is_number(constant) && op != CmpOp::Eq && op != CmpOp::Neq)
    throw Error("ordering comparison on a categorical constant");
  return Literal(Comparison{std::move(feature), op, std::move(constant)});
}

Literal Literal::interval(std::string feature, double low, double high) {
  if (low > high) throw Error("interval low > high");
  return Literal(Interval{std::move(feature), low, high});
}

Literal Literal::set_membership(std::string feature, std::vector<std::string> values,
                                SetPolarity polarity) {
  if (values.empty()) throw Error("set membership needs a non-empty value set");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return Literal(SetMembership{std::move(feature), std::move(values), polarity});
}

Literal Literal::m_of_n(int m, std::vector<Literal> literals) {
  const int n = static_cast<int>(literals.size());
  if (n < 2) throw Error("m-of-n needs at least 2 literals");
  if (m < 1 || m > n) throw Error("m-of-n needs 1 <= m <= n");
  for (const Literal& inner : literals)
    if (inner.is<MOfN>()) throw Error("m-of-n literals cannot nest");
  return Literal(MOfN{m, std::move(literals)});
}

Literal Literal::fuzzy(std::string feature, std::string label) {
  if (feature.empty() || label.empty()) throw Error("fuzzy literal needs feature and label");
  return Literal(Fuzzy{std::move(feature), std::move(label)});
}

Literal Literal::oblique(std::vector<std::pair<std::string, double>> coefficients, CmpOp op,
                         double threshold) {
  std::erase_if(coefficients, [](const auto& c) { return c.second == 0.0; });
  if (coefficients.size() < 2)
    throw Error("oblique literal needs >= 2 non-zero coefficients; use a comparison");
  if (op == CmpOp::Eq || op == CmpOp::Neq) throw Error("oblique literal op must be an inequality");
  return Literal(Oblique{std::move(coefficients), op, threshold});
}

namespace {
const std::string kNoFeature;

bool cmp_holds(CmpOp op, double lhs, double rhs) {
  switch (op) {
    case CmpOp::Eq: return lhs == rhs;
    case CmpOp::Neq: return lhs != rhs;
    case CmpOp::Lt: return lhs < rhs;
    case CmpOp::Le: return lhs <= rhs;
    case CmpOp::Gt: return lhs > rhs;
    case CmpOp::Ge: return lhs >= rhs;
  }
  return false;
}
}  // namespace

const std::string& Literal::feature() const {
  if (auto* c = get_if<Comparison>()) return c->feature;
  if (auto* i = get_if<Interval>()) return i->feature;
  if (auto* s = get_if<SetMembership>()) return s->feature;
  if (auto* f = get_if<Fuzzy>()) return f->feature;
  return kNoFeature;
}

bool Literal::operator==(const Literal& other) const {
  if (node_.index() != other.node_.index()) return false;
  if (auto* a = get_if<Comparison>()) {
    auto* b = other.get_if<Comparison>();
    return a->feature == b->feature && a->op == b->op && value_equal(a->constant, b->constant);
  }
  if (auto* a = get_if<Interval>()) {
    auto* b = other.get_if<Interval>();
    return a->feature == b->feature && a->low == b->low && a->high == b->high;
  }
  if (auto* a = get_if<SetMembership>()) {
    auto* b = other.get_if<SetMembership>();
    return a->feature == b->feature && a->polarity == b->polarity && a->values == b->values;
  }
  if (auto* a = get_if<MOfN>()) {
    auto* b = other.get_if<MOfN>();
    return a->m == b->m && a->literals == b->literals;
  }
  if (auto* a = get_if<Fuzzy>()) {
    auto* b = other.get_if<Fuzzy>();
    return a->feature == b->feature && a->label == b->label;
  }
  auto* a = get_if<Oblique>();
  auto* b = other.get_if<Oblique>();
  return a->coefficients == b->coefficients && a->op == b->op && a->threshold == b->threshold;
}

LiteralEval evaluate_literal(const Literal& lit, const Instance& x, const FeatureSchema& schema,
                             const FuzzyTable* fuzzy) {
  if (auto* c = lit.get_if<Comparison>()) {
    const Value& v = x[schema.require(c->feature)];
    bool ok;
    if (is_number(c->constant)) {
      if (!is_number(v)) throw Error("numeric comparison on categorical value: " + c->feature);
      ok = cmp_holds(c->op, as_number(v), as_number(c->constant));
    } else {
      const bool eq = !is_number(v) && as_category(v) == as_category(c->constant);
      ok = (c->op == CmpOp::Eq) ? eq : !eq;
    }
    return {ok, ok ? 1.0 : 0.0};
  }
  if (auto* iv = lit.get_if<Interval>()) {
    const double v = as_number(x[schema.require(iv->feature)]);
    const bool ok = v >= iv->low && v <= iv->high;
    return {ok, ok ? 1.0 : 0.0};
  }
  if (auto* s = lit.get_if<SetMembership>()) {
    const Value& v = x[schema.require(s->feature)];
    const std::string label = is_number(v) ? std::string() : as_category(v);
    const bool in = std::binary_search(s->values.begin(), s->values.end(), label);
    const bool ok = (s->polarity == SetPolarity::In) ? in : !in;
    return {ok, ok ? 1.0 : 0.0};
  }
  if (auto* m = lit.get_if<MOfN>()) {
    int count = 0;
    for (const Literal& inner : m->literals)
      if (evaluate_literal(inner, x, schema, fuzzy).satisfied) ++count;
    return {count >= m->m, static_cast<double>(count) / static_cast<double>(m->literals.size())};
  }
  if (auto* f = lit.get_if<Fuzzy>()) {
    if (fuzzy == nullptr) throw Error("fuzzy literal needs a membership table");
    const FuzzyTable::Trapezoid* t = fuzzy->find(f->feature, f->label);
    if (t == nullptr) throw Error("no membership function for " + f->feature + " / " + f->label);
    const double degree = t->membership(as_number(x[schema.require(f->feature)]));
    return {degree >= fuzzy->alpha(), degree};
  }
  auto* o = lit.get_if<Oblique>();
  double sum = 0;
  for (const auto& [name, coeff] : o->coefficients)
    sum += coeff * as_number(x[schema.require(name)]);
  const bool ok = cmp_holds(o->op, sum, o->threshold);
  return {ok, ok ? 1.0 : 0.0};
}

void collect_features(const Literal& lit, std::vector<std::string>& out) {
  if (auto* m = lit.get_if<MOfN>()) {
    for (const Literal& inner : m->literals) collect_features(inner, out);
    return;
  }
  if (auto* o = lit.get_if<Oblique>()) {
    for (const auto& [name, coeff] : o->coefficients) out.push_back(name);
    return;
  }
  out.push_back(lit.feature());
}

}  // namespace skq
