#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skq/rule.hpp"

namespace skq {

struct SourceSpan {
  int line = 1;
  int column = 1;
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Syntax error with the exact source location and what was expected there.
class ParseError : public Error {
 public:
  ParseError(SourceSpan span, std::string expected, std::string found);

  SourceSpan span;
  std::string expected;
  std::string found;
};

struct ParseResult {
  KnowledgeBase kb;
  std::vector<std::string> warnings;  // e.g. duplicate literals collapsed
};

/// Parses a theory in the Prolog-like clause syntax. Clause order becomes
/// rule order and the result defaults to ordered. The head argument list
/// defines the schema, or is checked against `hint` when given.
ParseResult parse_theory(std::string_view text, const FeatureSchema* hint = nullptr);

/// Inverse of parse_theory: the output re-parses to a semantically equal
/// knowledge base. Constant postconditions render in head position, linear
/// ones as an `is` body literal.
std::string render_theory(const KnowledgeBase& kb);

std::string render_literal(const Literal& lit);
std::string render_postcondition(const Postcondition& post, const std::string& output_name);

/// Parses one literal, e.g. `EU =< 0.01` or `2 of [X > 0, Y > 0]`.
Literal parse_literal_text(std::string_view text);

/// Parses a postcondition: a number, a category label, or a linear
/// expression such as `0.1 + 0.5*EU`.
Postcondition parse_postcondition_text(std::string_view text);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_number(double v);

/// True when the two knowledge bases have the same feature space, ordering,
/// rule order, literal multisets per rule and postconditions.
bool semantically_equal(const KnowledgeBase& a, const KnowledgeBase& b);

}  // namespace skq
