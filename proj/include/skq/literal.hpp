#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "skq/schema.hpp"

namespace skq {

enum class CmpOp { Eq, Neq, Lt, Le, Gt, Ge };

const char* cmp_op_text(CmpOp op);  // Prolog-style: =, \=, <, =<, >, >=

/// feature op constant, e.g. `EU =< 0.01` or `color = blue`.
struct Comparison {
  std::string feature;
  CmpOp op = CmpOp::Le;
  Value constant;
};

/// feature in [low, high], closed on both ends.
struct Interval {
  std::string feature;
  double low = 0;
  double high = 0;
};

enum class SetPolarity { In, NotIn };

/// feature in {a, b, ...} or feature not_in {...}. Values kept sorted.
struct SetMembership {
  std::string feature;
  std::vector<std::string> values;
  SetPolarity polarity = SetPolarity::In;
};

class Literal;

/// Satisfied when at least m of the inner literals hold. Inner literals are
/// never themselves MOfN.
struct MOfN {
  int m = 1;
  std::vector<Literal> literals;
};

/// feature is_label <label>, resolved against a FuzzyTable.
struct Fuzzy {
  std::string feature;
  std::string label;
};

/// Linear combination of >= 2 features compared against a threshold.
/// A single-feature constraint must be a Comparison instead.
struct Oblique {
  std::vector<std::pair<std::string, double>> coefficients;  // non-zero entries
  CmpOp op = CmpOp::Le;                                      // inequality only
  double threshold = 0;
};

/// Trapezoidal membership functions keyed by (feature, label), plus the
/// alpha cut used to turn degrees into crisp matches.
class FuzzyTable {
 public:
  struct Trapezoid {
    double a = 0, b = 0, c = 0, d = 0;  // a <= b <= c <= d
    double membership(double x) const;
  };

  explicit FuzzyTable(double alpha = 0.5);

  void define(const std::string& feature, const std::string& label, Trapezoid t);
  const Trapezoid* find(const std::string& feature, const std::string& label) const;
  double alpha() const { return alpha_; }

 private:
  std::map<std::pair<std::string, std::string>, Trapezoid> table_;
  double alpha_;
};

/// A single precondition constraint. Construction goes through the factory
/// functions, which enforce the representation invariants.
class Literal {
 public:
  using Node = std::variant<Comparison, Interval, SetMembership, MOfN, Fuzzy, Oblique>;

  static Literal comparison(std::string feature, CmpOp op, Value constant);
  static Literal interval(std::string feature, double low, double high);
  static Literal set_membership(std::string feature, std::vector<std::string> values,
                                SetPolarity polarity = SetPolarity::In);
  static Literal m_of_n(int m, std::vector<Literal> literals);
  static Literal fuzzy(std::string feature, std::string label);
  static Literal oblique(std::vector<std::pair<std::string, double>> coefficients, CmpOp op,
                         double threshold);

  const Node& node() const { return node_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(node_);
  }

  /// Name of the single constrained feature; empty for MOfN and Oblique.
  const std::string& feature() const;

  bool operator==(const Literal& other) const;
  bool operator!=(const Literal& other) const { return !(*this == other); }

 private:
  explicit Literal(Node node) : node_(std::move(node)) {}
  Node node_;
};

struct LiteralEval {
  bool satisfied = false;
  double degree = 0;  // in [0, 1]; crisp literals give exactly 0 or 1
};

/// Evaluates one literal on an instance. Crisp kinds report degree equal to
/// their truth value; MOfN reports satisfied-count / N; Fuzzy reports the
/// membership degree and is satisfied at or above the table's alpha cut.
LiteralEval evaluate_literal(const Literal& lit, const Instance& x, const FeatureSchema& schema,
                             const FuzzyTable* fuzzy = nullptr);

/// Every feature referenced by the literal, in reference order (duplicates kept).
void collect_features(const Literal& lit, std::vector<std::string>& out);

}  // namespace skq
