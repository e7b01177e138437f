#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "skq/region.hpp"
#include "skq/rule.hpp"

namespace skq {

/// Binary decision tree: internal nodes hold a crisp literal, the left child
/// is taken when the literal holds, the right one otherwise.
struct DecisionTreeNode {
  struct Internal {
    Literal literal;
    std::unique_ptr<DecisionTreeNode> left;   // literal true
    std::unique_ptr<DecisionTreeNode> right;  // literal false
  };
  struct Leaf {
    Postcondition postcondition;
  };
  std::variant<Internal, Leaf> node;

  static std::unique_ptr<DecisionTreeNode> leaf(Postcondition post);
  static std::unique_ptr<DecisionTreeNode> split(Literal lit,
                                                 std::unique_ptr<DecisionTreeNode> left,
                                                 std::unique_ptr<DecisionTreeNode> right);
};

/// Rectangular decision table: one column per input feature plus the output
/// column last; each row is a rule, absent cells are unconstrained.
struct DecisionTable {
  std::vector<std::string> columns;  // input names then output name
  struct Row {
    std::vector<std::optional<Literal>> cells;  // one per input column
    Postcondition output;
  };
  std::vector<Row> rows;
};

/// Rule whose body is either a postcondition or a nested sublist of rules.
struct HierarchicalRule {
  std::vector<Literal> precondition;
  std::variant<Postcondition, std::vector<HierarchicalRule>> body;
};

/// One rule per root-to-leaf path; right branches contribute the complement
/// of the node literal. The result is unordered, exhaustive and disjoint,
/// with exactly one rule per leaf.
KnowledgeBase tree_to_rules(const DecisionTreeNode& tree, const FeatureSchema& schema);

/// One rule per row; duplicate constraints on one feature are intersected.
KnowledgeBase table_to_rules(const DecisionTable& table, const FeatureSchema& schema);

/// Flattens nested sublists depth-first, conjoining ancestor preconditions.
KnowledgeBase flatten_hierarchy(const std::vector<HierarchicalRule>& rules,
                                const FeatureSchema& schema,
                                Ordering ordering = Ordering::Ordered);

/// Exact complement of a crisp literal as a disjunction of literals.
/// Throws NonComplementableLiteral for fuzzy literals and for m-of-n groups
/// whose inner literals do not complement to single literals.
std::vector<Literal> complement_literal(const Literal& lit);

/// Materializes the implicit negations of an ordered list: rule n expands to
/// region(pre_n) within bounds minus the regions of rules 1..n-1. The result
/// is unordered and pairwise disjoint and predicts identically inside bounds.
KnowledgeBase ordered_to_unordered(const KnowledgeBase& kb, const Region& bounds,
                                   std::size_t max_regions = 10000);

enum class SimplifyContext { Standalone, OrderedPrefixFree };

/// Intersects same-feature bound literals into at most one lower bound, one
/// upper bound or one interval, dropping strictly weaker duplicates. Rules
/// whose constraints have empty intersection come back flagged unsatisfiable
/// rather than dropped.
Rule simplify_rule(const Rule& r, SimplifyContext context = SimplifyContext::Standalone);

/// Whole-list simplification. Each rule is simplified standalone; in ordered
/// lists, literals implied by the failure of all earlier preconditions are
/// also dropped (the region kernel proves the implication), reproducing the
/// usual redundant-literal cleanups of tree-derived lists.
KnowledgeBase simplify_knowledge_base(const KnowledgeBase& kb,
                                      const std::optional<Region>& bounds = std::nullopt);

/// Collapses unordered rules that differ only in one categorical equality or
/// set literal and share the postcondition into a single set-membership rule.
/// Runs to fixpoint; never increases the rule count.
KnowledgeBase merge_same_output(const KnowledgeBase& kb);

/// Plain-text interchange: an indented tree description.
///   split: <literal>     (children indented two spaces, true branch first)
///   leaf: <postcondition>
std::unique_ptr<DecisionTreeNode> parse_tree_text(std::string_view text);

/// Plain-text interchange: '|'-separated cells, header row of feature names
/// with the output column last, `*` for unconstrained cells. Cells may spell
/// a full literal or start with an operator applied to the column feature.
DecisionTable parse_table_text(std::string_view text);

}  // namespace skq
