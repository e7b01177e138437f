#include "skq/normalize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "skq/parser.hpp"

namespace skq {

std::unique_ptr<DecisionTreeNode> DecisionTreeNode::leaf(Postcondition post) {
  auto node = std::make_unique<DecisionTreeNode>();
  node->node = Leaf{std::move(post)};
  return node;
}

std::unique_ptr<DecisionTreeNode> DecisionTreeNode::split(Literal lit,
                                                          std::unique_ptr<DecisionTreeNode> left,
                                                          std::unique_ptr<DecisionTreeNode> right) {
  auto node = std::make_unique<DecisionTreeNode>();
  node->node = Internal{std::move(lit), std::move(left), std::move(right)};
  return node;
}

namespace {

void push_unique(std::vector<Literal>& literals, Literal lit) {
  for (const Literal& existing : literals)
    if (existing == lit) return;
  literals.push_back(std::move(lit));
}

/// Complement as a single literal: the disjunction wrapped as 1-of-n when
/// the exact complement has several branches.
Literal complement_as_literal(const Literal& lit) {
  std::vector<Literal> pieces = complement_literal(lit);
  if (pieces.size() == 1) return pieces.front();
  return Literal::m_of_n(1, std::move(pieces));
}

void walk_tree(const DecisionTreeNode& node, std::vector<Literal>& path,
               std::vector<Rule>& rules) {
  if (auto* leaf = std::get_if<DecisionTreeNode::Leaf>(&node.node)) {
    Rule rule;
    rule.precondition = path;
    rule.postcondition = leaf->postcondition;
    rules.push_back(std::move(rule));
    return;
  }
  const auto& internal = std::get<DecisionTreeNode::Internal>(node.node);
  if (internal.literal.is<Fuzzy>())
    throw NonComplementableLiteral("fuzzy split in a decision tree");

  path.push_back(internal.literal);
  walk_tree(*internal.left, path, rules);
  path.back() = complement_as_literal(internal.literal);
  walk_tree(*internal.right, path, rules);
  path.pop_back();
}

}  // namespace

KnowledgeBase tree_to_rules(const DecisionTreeNode& tree, const FeatureSchema& schema) {
  KnowledgeBase kb;
  kb.schema = schema;
  kb.ordering = Ordering::Unordered;
  kb.provenance = "tree";
  std::vector<Literal> path;
  walk_tree(tree, path, kb.rules);
  for (Rule& rule : kb.rules) {
    std::vector<Literal> deduped;
    for (Literal& lit : rule.precondition) push_unique(deduped, std::move(lit));
    rule.precondition = std::move(deduped);
  }
  kb.validate();
  return kb;
}

KnowledgeBase table_to_rules(const DecisionTable& table, const FeatureSchema& schema) {
  if (table.rows.empty()) throw Error("empty decision table");
  if (table.columns.size() < 2) throw Error("decision table needs input and output columns");
  KnowledgeBase kb;
  kb.schema = schema;
  kb.ordering = Ordering::Unordered;
  kb.provenance = "table";
  for (const DecisionTable::Row& row : table.rows) {
    if (row.cells.size() + 1 != table.columns.size())
      throw Error("decision table row width does not match the header");
    Rule rule;
    for (const auto& cell : row.cells)
      if (cell) push_unique(rule.precondition, *cell);
    rule.postcondition = row.output;
    // Repeated columns on one feature intersect into a single constraint.
    kb.rules.push_back(simplify_rule(rule));
  }
  kb.validate();
  return kb;
}

namespace {

void flatten_into(const std::vector<HierarchicalRule>& rules, std::vector<Literal>& prefix,
                  std::vector<Rule>& out) {
  for (const HierarchicalRule& hr : rules) {
    const std::size_t mark = prefix.size();
    for (const Literal& lit : hr.precondition) {
      bool seen = false;
      for (const Literal& existing : prefix)
        if (existing == lit) {
          seen = true;
          break;
        }
      if (!seen) prefix.push_back(lit);
    }
    if (auto* post = std::get_if<Postcondition>(&hr.body)) {
      out.push_back(Rule{prefix, *post});
    } else {
      flatten_into(std::get<std::vector<HierarchicalRule>>(hr.body), prefix, out);
    }
    prefix.resize(mark);
  }
}

}  // namespace

KnowledgeBase flatten_hierarchy(const std::vector<HierarchicalRule>& rules,
                                const FeatureSchema& schema, Ordering ordering) {
  KnowledgeBase kb;
  kb.schema = schema;
  kb.ordering = ordering;
  kb.provenance = "hierarchy";
  std::vector<Literal> prefix;
  flatten_into(rules, prefix, kb.rules);
  kb.validate();
  return kb;
}

std::vector<Literal> complement_literal(const Literal& lit) {
  if (auto* cmp = lit.get_if<Comparison>()) {
    CmpOp flipped;
    switch (cmp->op) {
      case CmpOp::Eq: flipped = CmpOp::Neq; break;
      case CmpOp::Neq: flipped = CmpOp::Eq; break;
      case CmpOp::Lt: flipped = CmpOp::Ge; break;
      case CmpOp::Le: flipped = CmpOp::Gt; break;
      case CmpOp::Gt: flipped = CmpOp::Le; break;
      default: flipped = CmpOp::Lt; break;
    }
    return {Literal::comparison(cmp->feature, flipped, cmp->constant)};
  }
  if (auto* iv = lit.get_if<Interval>()) {
    return {Literal::comparison(iv->feature, CmpOp::Lt, iv->low),
            Literal::comparison(iv->feature, CmpOp::Gt, iv->high)};
  }
  if (auto* set = lit.get_if<SetMembership>()) {
    return {Literal::set_membership(
        set->feature, set->values,
        set->polarity == SetPolarity::In ? SetPolarity::NotIn : SetPolarity::In)};
  }
  if (auto* m = lit.get_if<MOfN>()) {
    // not(at least m of N) = at least N-m+1 of the N complements.
    std::vector<Literal> inner;
    inner.reserve(m->literals.size());
    for (const Literal& l : m->literals) {
      std::vector<Literal> c = complement_literal(l);
      if (c.size() != 1)
        throw NonComplementableLiteral(
            "m-of-n complement needs single-literal complements of its members");
      inner.push_back(std::move(c.front()));
    }
    const int n = static_cast<int>(inner.size());
    return {Literal::m_of_n(n - m->m + 1, std::move(inner))};
  }
  if (auto* ob = lit.get_if<Oblique>()) {
    CmpOp flipped;
    switch (ob->op) {
      case CmpOp::Lt: flipped = CmpOp::Ge; break;
      case CmpOp::Le: flipped = CmpOp::Gt; break;
      case CmpOp::Gt: flipped = CmpOp::Le; break;
      default: flipped = CmpOp::Lt; break;
    }
    return {Literal::oblique(ob->coefficients, flipped, ob->threshold)};
  }
  throw NonComplementableLiteral("fuzzy literal has no crisp complement");
}

KnowledgeBase ordered_to_unordered(const KnowledgeBase& kb, const Region& bounds,
                                   std::size_t max_regions) {
  if (kb.ordering == Ordering::Unordered) return kb;
  KnowledgeBase out;
  out.schema = kb.schema;
  out.ordering = Ordering::Unordered;
  out.provenance = kb.provenance;

  std::vector<Region> earlier;
  for (const Rule& rule : kb.rules) {
    if (rule.unsatisfiable) continue;
    Region own = region_of_precondition(rule.precondition, kb.schema, bounds);
    std::vector<Region> pieces;
    if (!own.empty()) pieces.push_back(std::move(own));
    for (const Region& cut : earlier) {
      std::vector<Region> next;
      for (const Region& piece : pieces) {
        std::vector<Region> rest = subtract_regions(piece, cut);
        next.insert(next.end(), std::make_move_iterator(rest.begin()),
                    std::make_move_iterator(rest.end()));
      }
      pieces = std::move(next);
      if (out.rules.size() + pieces.size() > max_regions)
        throw RegionBudgetExceeded("ordered_to_unordered exceeds " +
                                   std::to_string(max_regions) + " regions");
    }
    for (const Region& piece : pieces) {
      Rule expanded;
      expanded.precondition = region_to_literals(piece, kb.schema, bounds);
      expanded.postcondition = rule.postcondition;
      out.rules.push_back(std::move(expanded));
      if (out.rules.size() > max_regions)
        throw RegionBudgetExceeded("ordered_to_unordered exceeds " +
                                   std::to_string(max_regions) + " regions");
    }
    earlier.push_back(region_of_precondition(rule.precondition, kb.schema, bounds));
  }
  if (out.rules.empty()) throw Error("ordered_to_unordered produced no reachable rules");
  out.validate();
  return out;
}

namespace {

struct BoundAccumulator {
  DimInterval interval = DimInterval::all();
  bool saw_interval_literal = false;
  bool saw_lower = false;
  bool saw_upper = false;
  std::vector<double> not_equal;

  void add_comparison(CmpOp op, double c) {
    switch (op) {
      case CmpOp::Lt:
        interval = std::get<DimInterval>(tighten({-INFINITY, c, false, false}));
        saw_upper = true;
        break;
      case CmpOp::Le:
        interval = std::get<DimInterval>(tighten({-INFINITY, c, false, true}));
        saw_upper = true;
        break;
      case CmpOp::Gt:
        interval = std::get<DimInterval>(tighten({c, INFINITY, false, false}));
        saw_lower = true;
        break;
      case CmpOp::Ge:
        interval = std::get<DimInterval>(tighten({c, INFINITY, true, false}));
        saw_lower = true;
        break;
      case CmpOp::Eq:
        interval = std::get<DimInterval>(tighten(DimInterval::closed(c, c)));
        saw_lower = saw_upper = true;
        break;
      case CmpOp::Neq:
        not_equal.push_back(c);
        break;
    }
  }

  DimConstraint tighten(DimInterval other) const {
    Region a({DimConstraint{interval}});
    Region b({DimConstraint{other}});
    return intersect(a, b).dim(0);
  }

  void add_interval(double lo, double hi) {
    interval = std::get<DimInterval>(tighten(DimInterval::closed(lo, hi)));
    saw_interval_literal = true;
    saw_lower = saw_upper = true;
  }

  bool empty() const { return interval.empty(); }

  // Emits the merged constraint; assumes the interval is non-empty.
  std::vector<Literal> emit(const std::string& feature) const {
    std::vector<Literal> out;
    if (interval.lo == interval.hi) {
      out.push_back(Literal::comparison(feature, CmpOp::Eq, interval.lo));
    } else if (saw_interval_literal && !interval.unbounded_lo() && !interval.unbounded_hi() &&
               interval.lo_closed && interval.hi_closed) {
      out.push_back(Literal::interval(feature, interval.lo, interval.hi));
    } else {
      if (!interval.unbounded_lo())
        out.push_back(Literal::comparison(feature, interval.lo_closed ? CmpOp::Ge : CmpOp::Gt,
                                          interval.lo));
      if (!interval.unbounded_hi())
        out.push_back(Literal::comparison(feature, interval.hi_closed ? CmpOp::Le : CmpOp::Lt,
                                          interval.hi));
    }
    for (double c : not_equal)
      if (interval.contains(c))
        out.push_back(Literal::comparison(feature, CmpOp::Neq, c));
    return out;
  }
};

struct CategoryAccumulator {
  bool has_allowed = false;
  std::set<std::string> allowed;
  std::set<std::string> excluded;
  bool saw_set_literal = false;

  void allow(const std::vector<std::string>& values) {
    std::set<std::string> incoming(values.begin(), values.end());
    if (!has_allowed) {
      allowed = std::move(incoming);
      has_allowed = true;
    } else {
      std::set<std::string> kept;
      std::set_intersection(allowed.begin(), allowed.end(), incoming.begin(), incoming.end(),
                            std::inserter(kept, kept.begin()));
      allowed = std::move(kept);
    }
  }

  bool empty() const {
    if (!has_allowed) return false;
    for (const std::string& v : allowed)
      if (!excluded.count(v)) return false;
    return true;
  }

  std::vector<Literal> emit(const std::string& feature) const {
    std::vector<Literal> out;
    if (has_allowed) {
      std::vector<std::string> kept;
      for (const std::string& v : allowed)
        if (!excluded.count(v)) kept.push_back(v);
      if (kept.size() == 1)
        out.push_back(Literal::comparison(feature, CmpOp::Eq, kept.front()));
      else
        out.push_back(Literal::set_membership(feature, kept, SetPolarity::In));
    } else if (!excluded.empty()) {
      std::vector<std::string> values(excluded.begin(), excluded.end());
      if (values.size() == 1 && !saw_set_literal)
        out.push_back(Literal::comparison(feature, CmpOp::Neq, values.front()));
      else
        out.push_back(Literal::set_membership(feature, values, SetPolarity::NotIn));
    }
    return out;
  }
};

bool is_bound_literal(const Literal& lit) {
  if (lit.is<Interval>()) return true;
  if (auto* cmp = lit.get_if<Comparison>()) return true;
  if (lit.is<SetMembership>()) return true;
  return false;
}

}  // namespace

Rule simplify_rule(const Rule& r, SimplifyContext) {
  // Both contexts merge within the rule only: an order-aware variant would
  // need the earlier rules, which simplify_knowledge_base supplies.
  std::map<std::string, BoundAccumulator> bounds;
  std::map<std::string, CategoryAccumulator> categories;
  std::vector<std::string> emitted;

  for (const Literal& lit : r.precondition) {
    if (auto* cmp = lit.get_if<Comparison>()) {
      if (is_number(cmp->constant))
        bounds[cmp->feature].add_comparison(cmp->op, as_number(cmp->constant));
      else if (cmp->op == CmpOp::Eq)
        categories[cmp->feature].allow({as_category(cmp->constant)});
      else
        categories[cmp->feature].excluded.insert(as_category(cmp->constant));
    } else if (auto* iv = lit.get_if<Interval>()) {
      bounds[iv->feature].add_interval(iv->low, iv->high);
    } else if (auto* set = lit.get_if<SetMembership>()) {
      auto& acc = categories[set->feature];
      if (set->polarity == SetPolarity::In) {
        acc.allow(set->values);
        acc.saw_set_literal = true;
      } else {
        acc.excluded.insert(set->values.begin(), set->values.end());
        acc.saw_set_literal = true;
      }
    }
  }

  for (const auto& [feature, acc] : bounds)
    if (acc.empty()) {
      Rule out = r;
      out.unsatisfiable = true;
      return out;
    }
  for (const auto& [feature, acc] : categories)
    if (acc.empty()) {
      Rule out = r;
      out.unsatisfiable = true;
      return out;
    }

  Rule out;
  out.postcondition = r.postcondition;
  out.unsatisfiable = r.unsatisfiable;
  for (const Literal& lit : r.precondition) {
    if (!is_bound_literal(lit)) {
      for (const Literal& existing : out.precondition)
        if (existing == lit) goto next_literal;
      out.precondition.push_back(lit);
      goto next_literal;
    }
    {
      const std::string& feature = lit.feature();
      if (std::find(emitted.begin(), emitted.end(), feature) != emitted.end()) goto next_literal;
      emitted.push_back(feature);
      std::vector<Literal> merged;
      if (auto it = bounds.find(feature); it != bounds.end()) merged = it->second.emit(feature);
      if (auto it = categories.find(feature); it != categories.end()) {
        std::vector<Literal> cat = it->second.emit(feature);
        merged.insert(merged.end(), cat.begin(), cat.end());
      }
      out.precondition.insert(out.precondition.end(), merged.begin(), merged.end());
    }
  next_literal:;
  }
  return out;
}

namespace {

bool all_axis_parallel(const std::vector<Literal>& literals) {
  for (const Literal& lit : literals) {
    if (lit.is<MOfN>() || lit.is<Fuzzy>() || lit.is<Oblique>()) return false;
    if (auto* cmp = lit.get_if<Comparison>())
      if (cmp->op == CmpOp::Neq && is_number(cmp->constant)) return false;
  }
  return true;
}

bool covered_by(const std::vector<Region>& reach, const std::vector<Literal>& others,
                const Literal& candidate, const FeatureSchema& schema, const Region& bounds) {
  const Region lit_region = region_of_precondition({candidate}, schema, bounds);
  const Region rest = region_of_precondition(others, schema, bounds);
  for (const Region& piece : reach) {
    Region overlap = intersect(piece, rest);
    if (overlap.empty()) continue;
    if (!subtract_regions(overlap, lit_region).empty()) return false;
  }
  return true;
}

}  // namespace

KnowledgeBase simplify_knowledge_base(const KnowledgeBase& kb,
                                      const std::optional<Region>& bounds_opt) {
  const Region bounds = bounds_opt ? *bounds_opt : Region::whole_space(kb.schema);
  KnowledgeBase out = kb;
  for (Rule& rule : out.rules) rule = simplify_rule(rule);
  if (kb.ordering != Ordering::Ordered) return out;

  std::vector<Region> reach{bounds};
  for (std::size_t i = 0; i < out.rules.size(); ++i) {
    Rule& rule = out.rules[i];
    const bool prunable = !rule.unsatisfiable && all_axis_parallel(rule.precondition);
    if (prunable) {
      // Drop literals implied by the failure of all earlier preconditions.
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t k = 0; k < rule.precondition.size(); ++k) {
          std::vector<Literal> others;
          for (std::size_t j = 0; j < rule.precondition.size(); ++j)
            if (j != k) others.push_back(rule.precondition[j]);
          if (covered_by(reach, others, rule.precondition[k], kb.schema, bounds)) {
            rule.precondition = std::move(others);
            changed = true;
            break;
          }
        }
      }
    }
    if (!rule.unsatisfiable && all_axis_parallel(kb.rules[i].precondition)) {
      const Region own = region_of_precondition(kb.rules[i].precondition, kb.schema, bounds);
      std::vector<Region> next;
      for (const Region& piece : reach) {
        std::vector<Region> rest = subtract_regions(piece, own);
        next.insert(next.end(), std::make_move_iterator(rest.begin()),
                    std::make_move_iterator(rest.end()));
      }
      reach = std::move(next);
    } else if (!rule.unsatisfiable && rule.precondition.empty()) {
      reach.clear();
    }
  }
  return out;
}

KnowledgeBase merge_same_output(const KnowledgeBase& kb) {
  if (kb.ordering != Ordering::Unordered)
    throw Error("merge_same_output needs an unordered knowledge base");
  KnowledgeBase out = kb;

  auto mergeable_values = [](const Literal& lit) -> const std::vector<std::string>* {
    static thread_local std::vector<std::string> single;
    if (auto* cmp = lit.get_if<Comparison>()) {
      if (cmp->op == CmpOp::Eq && !is_number(cmp->constant)) {
        single = {as_category(cmp->constant)};
        return &single;
      }
      return nullptr;
    }
    if (auto* set = lit.get_if<SetMembership>()) {
      if (set->polarity == SetPolarity::In) return &set->values;
      return nullptr;
    }
    return nullptr;
  };

  bool merged_any = true;
  while (merged_any) {
    merged_any = false;
    for (std::size_t i = 0; i < out.rules.size() && !merged_any; ++i) {
      for (std::size_t j = i + 1; j < out.rules.size() && !merged_any; ++j) {
        Rule& a = out.rules[i];
        Rule& b = out.rules[j];
        if (a.unsatisfiable || b.unsatisfiable) continue;
        if (!postcondition_equal(a.postcondition, b.postcondition)) continue;
        if (a.precondition.size() != b.precondition.size()) continue;

        // Match literals pairwise; allow exactly one mismatching position.
        std::vector<bool> used(b.precondition.size(), false);
        std::vector<std::size_t> a_diff;
        for (std::size_t k = 0; k < a.precondition.size(); ++k) {
          bool matched = false;
          for (std::size_t l = 0; l < b.precondition.size(); ++l)
            if (!used[l] && a.precondition[k] == b.precondition[l]) {
              used[l] = true;
              matched = true;
              break;
            }
          if (!matched) a_diff.push_back(k);
        }
        if (a_diff.empty()) {  // identical rules collapse
          out.rules.erase(out.rules.begin() + static_cast<std::ptrdiff_t>(j));
          merged_any = true;
          break;
        }
        if (a_diff.size() != 1) continue;
        std::size_t b_diff = 0;
        for (std::size_t l = 0; l < used.size(); ++l)
          if (!used[l]) b_diff = l;

        const Literal& la = a.precondition[a_diff.front()];
        const Literal& lb = b.precondition[b_diff];
        const auto* va = mergeable_values(la);
        if (va == nullptr) continue;
        std::vector<std::string> union_values = *va;
        const auto* vb = mergeable_values(lb);
        if (vb == nullptr || la.feature() != lb.feature()) continue;
        union_values.insert(union_values.end(), vb->begin(), vb->end());

        a.precondition[a_diff.front()] =
            Literal::set_membership(la.feature(), std::move(union_values), SetPolarity::In);
        out.rules.erase(out.rules.begin() + static_cast<std::ptrdiff_t>(j));
        merged_any = true;
      }
    }
  }
  return out;
}

namespace {

struct TreeLine {
  int depth = 0;
  bool is_split = false;
  std::string payload;
  int number = 0;
};

std::unique_ptr<DecisionTreeNode> build_tree(const std::vector<TreeLine>& lines, std::size_t& pos,
                                             int depth) {
  if (pos >= lines.size())
    throw Error("tree text ended early; expected a node at depth " + std::to_string(depth));
  const TreeLine& line = lines[pos];
  if (line.depth != depth)
    throw Error("line " + std::to_string(line.number) + ": expected indent depth " +
                std::to_string(depth) + ", found " + std::to_string(line.depth));
  ++pos;
  if (!line.is_split) return DecisionTreeNode::leaf(parse_postcondition_text(line.payload));
  Literal lit = parse_literal_text(line.payload);
  auto left = build_tree(lines, pos, depth + 1);
  auto right = build_tree(lines, pos, depth + 1);
  return DecisionTreeNode::split(std::move(lit), std::move(left), std::move(right));
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::unique_ptr<DecisionTreeNode> parse_tree_text(std::string_view text) {
  std::vector<TreeLine> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::size_t indent = 0;
    while (indent < raw.size() && raw[indent] == ' ') ++indent;
    const std::string content = trim(raw);
    if (content.empty() || content[0] == '#') continue;
    if (indent % 2 != 0)
      throw Error("line " + std::to_string(number) + ": tree indent must be two spaces per level");
    TreeLine line;
    line.depth = static_cast<int>(indent / 2);
    line.number = number;
    if (content.rfind("split:", 0) == 0) {
      line.is_split = true;
      line.payload = trim(content.substr(6));
    } else if (content.rfind("leaf:", 0) == 0) {
      line.is_split = false;
      line.payload = trim(content.substr(5));
    } else {
      throw Error("line " + std::to_string(number) + ": expected 'split:' or 'leaf:'");
    }
    lines.push_back(std::move(line));
  }
  if (lines.empty()) throw Error("empty tree text");
  std::size_t pos = 0;
  auto tree = build_tree(lines, pos, 0);
  if (pos != lines.size())
    throw Error("line " + std::to_string(lines[pos].number) + ": unused tree nodes after the root");
  return tree;
}

DecisionTable parse_table_text(std::string_view text) {
  DecisionTable table;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t bar = line.find('|', start);
      cells.push_back(trim(line.substr(start, bar - start)));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (table.columns.empty()) {
      table.columns = std::move(cells);
      if (table.columns.size() < 2)
        throw Error("line " + std::to_string(number) + ": table needs input and output columns");
      continue;
    }
    if (cells.size() != table.columns.size())
      throw Error("line " + std::to_string(number) + ": row width does not match the header");
    DecisionTable::Row row;
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      const std::string& cell = cells[i];
      if (cell == "*" || cell.empty()) {
        row.cells.emplace_back(std::nullopt);
        continue;
      }
      // Cells may start with an operator applied to the column's feature.
      static const char* ops[] = {"=<", ">=", "\\=", "<", ">", "=", "in ", "not_in "};
      std::string full = cell;
      for (const char* op : ops)
        if (cell.rfind(op, 0) == 0) {
          full = table.columns[i] + " " + cell;
          break;
        }
      row.cells.emplace_back(parse_literal_text(full));
    }
    row.output = parse_postcondition_text(cells.back());
    table.rows.push_back(std::move(row));
  }
  if (table.columns.empty()) throw Error("empty table text");
  return table;
}

}  // namespace skq
