#include "skq/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

namespace skq {

namespace {

enum class Tok {
  Ident,     // lowercase-leading identifier
  Variable,  // uppercase-leading identifier
  Number,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Dot,    // clause terminator
  Neck,   // :-
  Plus,
  Minus,
  Star,
  CmpEq,  // =
  CmpNe,  // \=
  CmpLt,
  CmpLe,  // =<
  CmpGt,
  CmpGe,  // >=
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
  double number = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { tokenize(); }
  const std::vector<Token>& tokens() const { return tokens_; }

 private:
  void tokenize() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '%') {  // line comment
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      const SourceSpan start = here();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        lex_number(start);
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t begin = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          advance();
        std::string text(src_.substr(begin, pos_ - begin));
        const bool variable = std::isupper(static_cast<unsigned char>(text[0])) || text[0] == '_';
        push(variable ? Tok::Variable : Tok::Ident, std::move(text), start);
        continue;
      }
      switch (c) {
        case '(': advance(); push(Tok::LParen, "(", start); continue;
        case ')': advance(); push(Tok::RParen, ")", start); continue;
        case '[': advance(); push(Tok::LBracket, "[", start); continue;
        case ']': advance(); push(Tok::RBracket, "]", start); continue;
        case '{': advance(); push(Tok::LBrace, "{", start); continue;
        case '}': advance(); push(Tok::RBrace, "}", start); continue;
        case ',': advance(); push(Tok::Comma, ",", start); continue;
        case '+': advance(); push(Tok::Plus, "+", start); continue;
        case '-': advance(); push(Tok::Minus, "-", start); continue;
        case '*': advance(); push(Tok::Star, "*", start); continue;
        case '<': advance(); push(Tok::CmpLt, "<", start); continue;
        case '.': {
          // A clause terminator only before whitespace or end of input.
          if (pos_ + 1 < src_.size() &&
              !std::isspace(static_cast<unsigned char>(src_[pos_ + 1]))) {
            advance();
            throw ParseError(start, "clause terminator '.' followed by whitespace",
                             std::string(1, c));
          }
          advance();
          push(Tok::Dot, ".", start);
          continue;
        }
        case ':':
          if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
            advance();
            advance();
            push(Tok::Neck, ":-", start);
            continue;
          }
          advance();
          throw ParseError(start, "':-'", ":");
        case '>':
          advance();
          if (pos_ < src_.size() && src_[pos_] == '=') {
            advance();
            push(Tok::CmpGe, ">=", start);
          } else {
            push(Tok::CmpGt, ">", start);
          }
          continue;
        case '=':
          advance();
          if (pos_ < src_.size() && src_[pos_] == '<') {
            advance();
            push(Tok::CmpLe, "=<", start);
          } else {
            push(Tok::CmpEq, "=", start);
          }
          continue;
        case '\\':
          advance();
          if (pos_ < src_.size() && src_[pos_] == '=') {
            advance();
            push(Tok::CmpNe, "\\=", start);
            continue;
          }
          throw ParseError(start, "'\\='", "\\");
        default:
          throw ParseError(start, "a token", std::string(1, c));
      }
    }
    push(Tok::End, "", here());
  }

  void lex_number(SourceSpan start) {
    const std::size_t begin = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
    if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      advance();
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      advance();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          advance();
      } else {
        pos_ = mark;  // bare 'e' belongs to the next token
        col_ -= static_cast<int>(pos_ - mark);
      }
    }
    const std::string_view text = src_.substr(begin, pos_ - begin);
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw ParseError(start, "a number", std::string(text));
    Token t{Tok::Number, std::string(text), start, value};
    t.span.end = pos_;
    tokens_.push_back(std::move(t));
  }

  SourceSpan here() const { return {line_, col_, pos_, pos_}; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void push(Tok kind, std::string text, SourceSpan start) {
    start.end = pos_;
    tokens_.push_back(Token{kind, std::move(text), start});
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::vector<Token> tokens_;
};

bool is_cmp(Tok t) {
  return t == Tok::CmpEq || t == Tok::CmpNe || t == Tok::CmpLt || t == Tok::CmpLe ||
         t == Tok::CmpGt || t == Tok::CmpGe;
}

CmpOp to_cmp_op(Tok t) {
  switch (t) {
    case Tok::CmpEq: return CmpOp::Eq;
    case Tok::CmpNe: return CmpOp::Neq;
    case Tok::CmpLt: return CmpOp::Lt;
    case Tok::CmpLe: return CmpOp::Le;
    case Tok::CmpGt: return CmpOp::Gt;
    default: return CmpOp::Ge;
  }
}

struct LinTerms {
  double intercept = 0;
  std::vector<std::pair<std::string, double>> coefficients;  // first-mention order

  void add(const std::string& name, double coeff) {
    for (auto& [n, c] : coefficients)
      if (n == name) {
        c += coeff;
        return;
      }
    coefficients.emplace_back(name, coeff);
  }
};

struct ParsedClause {
  std::string functor;
  std::vector<std::string> input_names;
  // Output slot: exactly one of these is set.
  std::optional<std::string> output_variable;
  std::optional<Postcondition> head_constant;
  std::optional<LinTerms> is_expr;  // body `Out is ...`
  std::vector<Literal> precondition;
  SourceSpan head_span;
};

class Parser {
 public:
  Parser(std::string_view src) : lexer_(src) {}

  std::vector<ParsedClause> parse(std::vector<std::string>& warnings) {
    std::vector<ParsedClause> clauses;
    while (!at(Tok::End)) clauses.push_back(parse_clause(warnings));
    if (clauses.empty()) throw ParseError(peek().span, "a non-empty theory", "empty theory");
    return clauses;
  }

  Literal single_literal() {
    Literal lit = parse_literal();
    expect(Tok::End, "end of input");
    return lit;
  }

  LinTerms single_linexpr() {
    LinTerms terms = parse_linexpr();
    expect(Tok::End, "end of input");
    return terms;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const auto& toks = lexer_.tokens();
    return toks[std::min(index_ + ahead, toks.size() - 1)];
  }
  bool at(Tok t) const { return peek().kind == t; }
  const Token& take() { return lexer_.tokens()[index_++]; }

  const Token& expect(Tok t, const char* what) {
    if (!at(t)) throw ParseError(peek().span, what, found_text());
    return take();
  }

  std::string found_text() const {
    return at(Tok::End) ? "end of input" : "'" + peek().text + "'";
  }

  double signed_number(const char* what) {
    double sign = 1.0;
    if (at(Tok::Minus)) {
      take();
      sign = -1.0;
    } else if (at(Tok::Plus)) {
      take();
    }
    const Token& t = expect(Tok::Number, what);
    const double v = sign * t.number;
    return v == 0.0 ? 0.0 : v;  // -0.00 in listings reads as plain zero
  }

  ParsedClause parse_clause(std::vector<std::string>& warnings) {
    ParsedClause clause;
    const Token& head = expect(Tok::Ident, "a clause head");
    clause.functor = head.text;
    clause.head_span = head.span;
    expect(Tok::LParen, "'('");
    std::vector<Token> args;
    while (true) {
      if (at(Tok::Variable)) {
        args.push_back(take());
      } else if (at(Tok::Number) || at(Tok::Minus) || at(Tok::Plus)) {
        Token t{Tok::Number, peek().text, peek().span, 0};
        t.number = signed_number("a number");
        args.push_back(t);
      } else if (at(Tok::Ident)) {
        args.push_back(take());
      } else {
        throw ParseError(peek().span, "a head argument", found_text());
      }
      if (at(Tok::Comma)) {
        take();
        continue;
      }
      break;
    }
    expect(Tok::RParen, "')'");
    if (args.size() < 2)
      throw ParseError(clause.head_span, "a clause head with inputs and an output", clause.functor);

    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      if (args[i].kind != Tok::Variable)
        throw ParseError(args[i].span, "a variable input argument", "'" + args[i].text + "'");
      clause.input_names.push_back(args[i].text);
    }
    const Token& out = args.back();
    if (out.kind == Tok::Variable)
      clause.output_variable = out.text;
    else if (out.kind == Tok::Number)
      clause.head_constant = ConstantValue{out.number};
    else
      clause.head_constant = ConstantClass{out.text};

    if (at(Tok::Neck)) {
      take();
      parse_body(clause, warnings);
    }
    expect(Tok::Dot, "'.'");
    return clause;
  }

  void parse_body(ParsedClause& clause, std::vector<std::string>& warnings) {
    while (true) {
      parse_body_literal(clause, warnings);
      if (at(Tok::Comma)) {
        take();
        continue;
      }
      break;
    }
  }

  void parse_body_literal(ParsedClause& clause, std::vector<std::string>& warnings) {
    // `Var is ...` binds the output; everything else is a precondition literal.
    if (at(Tok::Variable) && peek(1).kind == Tok::Ident && peek(1).text == "is") {
      const Token& var = take();
      const Token& is_tok = take();
      if (clause.is_expr)
        throw ParseError(is_tok.span, "a single 'is' binding per clause", "'is'");
      if (!clause.output_variable || *clause.output_variable != var.text)
        throw ParseError(var.span, "'is' binding the output variable", "'" + var.text + "'");
      clause.is_expr = parse_linexpr();
      return;
    }
    add_literal(clause, parse_literal(), warnings);
  }

  void add_literal(ParsedClause& clause, Literal lit, std::vector<std::string>& warnings) {
    for (const Literal& existing : clause.precondition)
      if (existing == lit) {
        warnings.push_back("duplicate literal '" + render_literal(lit) + "' collapsed in clause " +
                           clause.functor);
        return;
      }
    clause.precondition.push_back(std::move(lit));
  }

  Literal parse_literal() {
    const Token& first = peek();
    // m-of-n: integer `of` [ ... ]
    if (first.kind == Tok::Number && peek(1).kind == Tok::Ident && peek(1).text == "of") {
      const Token& m_tok = take();
      if (m_tok.number != std::floor(m_tok.number) || m_tok.number < 1)
        throw ParseError(m_tok.span, "a positive integer m", "'" + m_tok.text + "'");
      take();  // of
      expect(Tok::LBracket, "'['");
      std::vector<Literal> inner;
      while (true) {
        const SourceSpan inner_span = peek().span;
        Literal lit = parse_literal();
        if (lit.is<MOfN>()) throw ParseError(inner_span, "a non-nested literal", "'of'");
        inner.push_back(std::move(lit));
        if (at(Tok::Comma)) {
          take();
          continue;
        }
        break;
      }
      expect(Tok::RBracket, "']'");
      try {
        return Literal::m_of_n(static_cast<int>(m_tok.number), std::move(inner));
      } catch (const Error& e) {
        throw ParseError(m_tok.span, "a valid m-of-n literal", e.what());
      }
    }

    if (first.kind == Tok::Variable) {
      const Tok next = peek(1).kind;
      if (next == Tok::Ident && (peek(1).text == "in" || peek(1).text == "not_in"))
        return parse_inclusion();
      if (next == Tok::Ident && peek(1).text == "is_label") {
        const Token& var = take();
        take();  // is_label
        const Token& label = expect(Tok::Ident, "a fuzzy label");
        return Literal::fuzzy(var.text, label.text);
      }
      if (is_cmp(next)) {
        const Token& var = take();
        const CmpOp op = to_cmp_op(take().kind);
        if (at(Tok::Ident)) {
          const Token& label = take();
          if (op != CmpOp::Eq && op != CmpOp::Neq)
            throw ParseError(label.span, "a number after an ordering comparison",
                             "'" + label.text + "'");
          return Literal::comparison(var.text, op, label.text);
        }
        return Literal::comparison(var.text, op, signed_number("a number"));
      }
      // Falls through: a linear expression starting with a variable (oblique).
    }

    if (first.kind == Tok::Number || first.kind == Tok::Minus || first.kind == Tok::Plus ||
        first.kind == Tok::Variable) {
      const SourceSpan span = first.span;
      LinTerms terms = parse_linexpr();
      if (!is_cmp(peek().kind))
        throw ParseError(peek().span, "a comparison operator", found_text());
      const CmpOp op = to_cmp_op(take().kind);
      const double rhs = signed_number("a number");
      const double threshold = rhs - terms.intercept;
      std::erase_if(terms.coefficients, [](const auto& c) { return c.second == 0.0; });
      if (terms.coefficients.empty())
        throw ParseError(span, "a constraint mentioning a variable", "constants only");
      if (terms.coefficients.size() == 1) {
        // Single-variable linear constraint normalizes to a plain comparison.
        const auto& [name, coeff] = terms.coefficients.front();
        CmpOp norm = op;
        if (coeff < 0) {
          switch (op) {
            case CmpOp::Lt: norm = CmpOp::Gt; break;
            case CmpOp::Le: norm = CmpOp::Ge; break;
            case CmpOp::Gt: norm = CmpOp::Lt; break;
            case CmpOp::Ge: norm = CmpOp::Le; break;
            default: break;
          }
        }
        double c = threshold / coeff;
        if (c == 0.0) c = 0.0;  // avoid -0
        return Literal::comparison(name, norm, c);
      }
      if (op == CmpOp::Eq || op == CmpOp::Neq)
        throw ParseError(span, "an inequality for an oblique constraint", "'='");
      return Literal::oblique(std::move(terms.coefficients), op, threshold);
    }
    throw ParseError(first.span, "a literal", found_text());
  }

  Literal parse_inclusion() {
    const Token& var = take();
    const Token& word = take();  // in | not_in
    const bool negated = word.text == "not_in";
    if (at(Tok::LBracket)) {
      take();
      const double low = signed_number("a number");
      expect(Tok::Comma, "','");
      const double high = signed_number("a number");
      const Token& close = expect(Tok::RBracket, "']'");
      if (low > high)
        throw ParseError(close.span, "an interval with low =< high", "'" + var.text + "'");
      if (!negated) return Literal::interval(var.text, low, high);
      // `not_in [a, b]` is the disjunction `X < a or X > b`: a 1-of-2 group.
      return Literal::m_of_n(1, {Literal::comparison(var.text, CmpOp::Lt, low),
                                 Literal::comparison(var.text, CmpOp::Gt, high)});
    }
    expect(Tok::LBrace, "'[' or '{'");
    std::vector<std::string> values;
    while (true) {
      const Token& v = expect(Tok::Ident, "a category label");
      values.push_back(v.text);
      if (at(Tok::Comma)) {
        take();
        continue;
      }
      break;
    }
    expect(Tok::RBrace, "'}'");
    return Literal::set_membership(var.text, std::move(values),
                                   negated ? SetPolarity::NotIn : SetPolarity::In);
  }

  // linexpr = [sign] term { (+|-) term },  term = number [[*] VARIABLE] | VARIABLE
  LinTerms parse_linexpr() {
    LinTerms terms;
    double sign = 1.0;
    if (at(Tok::Minus)) {
      take();
      sign = -1.0;
    } else if (at(Tok::Plus)) {
      take();
    }
    parse_linterm(terms, sign);
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const double s = take().kind == Tok::Plus ? 1.0 : -1.0;
      parse_linterm(terms, s);
    }
    return terms;
  }

  void parse_linterm(LinTerms& terms, double sign) {
    if (at(Tok::Number)) {
      const Token& num = take();
      if (at(Tok::Star)) {
        take();
        const Token& var = expect(Tok::Variable, "a variable after '*'");
        terms.add(var.text, sign * num.number);
        return;
      }
      if (at(Tok::Variable)) {  // juxtaposition: `-0.02 BOVESPA`
        const Token& var = take();
        terms.add(var.text, sign * num.number);
        return;
      }
      terms.intercept += sign * num.number;
      return;
    }
    const Token& var = expect(Tok::Variable, "a number or variable");
    terms.add(var.text, sign);
  }

  Lexer lexer_;
  std::size_t index_ = 0;
};

FeatureKind merge_kind(FeatureKind current, FeatureKind inferred, const std::string& name) {
  if (current == inferred) return current;
  throw SchemaMismatch("feature " + name + " used both as continuous and categorical");
}

void infer_kinds(const std::vector<Literal>& literals, std::map<std::string, FeatureKind>& kinds) {
  for (const Literal& lit : literals) {
    if (auto* cmp = lit.get_if<Comparison>()) {
      const FeatureKind kind =
          is_number(cmp->constant) ? FeatureKind::Continuous : FeatureKind::Categorical;
      auto [it, fresh] = kinds.emplace(cmp->feature, kind);
      if (!fresh) it->second = merge_kind(it->second, kind, cmp->feature);
    } else if (auto* set = lit.get_if<SetMembership>()) {
      auto [it, fresh] = kinds.emplace(set->feature, FeatureKind::Categorical);
      if (!fresh) it->second = merge_kind(it->second, FeatureKind::Categorical, set->feature);
    } else if (auto* m = lit.get_if<MOfN>()) {
      infer_kinds(m->literals, kinds);
    } else if (auto* iv = lit.get_if<Interval>()) {
      auto [it, fresh] = kinds.emplace(iv->feature, FeatureKind::Continuous);
      if (!fresh) it->second = merge_kind(it->second, FeatureKind::Continuous, iv->feature);
    } else if (auto* ob = lit.get_if<Oblique>()) {
      for (const auto& [name, coeff] : ob->coefficients) {
        auto [it, fresh] = kinds.emplace(name, FeatureKind::Continuous);
        if (!fresh) it->second = merge_kind(it->second, FeatureKind::Continuous, name);
      }
    } else if (auto* fz = lit.get_if<Fuzzy>()) {
      auto [it, fresh] = kinds.emplace(fz->feature, FeatureKind::Continuous);
      if (!fresh) it->second = merge_kind(it->second, FeatureKind::Continuous, fz->feature);
    }
  }
}

}  // namespace

ParseError::ParseError(SourceSpan s, std::string exp, std::string fnd)
    : Error("parse error at line " + std::to_string(s.line) + ", column " +
            std::to_string(s.column) + ": expected " + exp + ", found " + fnd),
      span(s),
      expected(std::move(exp)),
      found(std::move(fnd)) {}

ParseResult parse_theory(std::string_view text, const FeatureSchema* hint) {
  ParseResult result;
  Parser parser(text);
  std::vector<ParsedClause> clauses = parser.parse(result.warnings);

  const ParsedClause& first = clauses.front();
  for (const ParsedClause& clause : clauses) {
    if (clause.functor != first.functor || clause.input_names != first.input_names)
      throw SchemaMismatch("clause head differs from the first clause: " + clause.functor);
    if (clause.output_variable && first.output_variable &&
        *clause.output_variable != *first.output_variable)
      throw SchemaMismatch("inconsistent output variable: " + *clause.output_variable);
    if (clause.output_variable && !clause.is_expr)
      throw UnboundOutput("output variable " + *clause.output_variable +
                          " is not bound by an 'is' literal");
  }

  std::string output_name = "output";
  for (const ParsedClause& clause : clauses)
    if (clause.output_variable) {
      output_name = *clause.output_variable;
      break;
    }

  std::map<std::string, FeatureKind> kinds;
  FeatureKind output_kind = FeatureKind::Continuous;
  for (const ParsedClause& clause : clauses) {
    infer_kinds(clause.precondition, kinds);
    if (clause.head_constant && std::holds_alternative<ConstantClass>(*clause.head_constant))
      output_kind = FeatureKind::Categorical;
  }

  FeatureSchema schema;
  if (hint != nullptr) {
    if (hint->functor() != first.functor)
      throw SchemaMismatch("functor " + first.functor + " does not match schema hint " +
                           hint->functor());
    if (hint->inputs().size() != first.input_names.size())
      throw SchemaMismatch("clause arity does not match schema hint");
    for (std::size_t i = 0; i < first.input_names.size(); ++i)
      if (hint->inputs()[i].name != first.input_names[i])
        throw SchemaMismatch("input " + first.input_names[i] + " does not match schema hint");
    for (const auto& [name, kind] : kinds)
      if (hint->inputs()[hint->require(name)].kind != kind)
        throw SchemaMismatch("feature " + name + " kind does not match schema hint");
    schema = *hint;
  } else {
    std::vector<Feature> inputs;
    for (const std::string& name : first.input_names) {
      auto it = kinds.find(name);
      inputs.push_back({name, it == kinds.end() ? FeatureKind::Continuous : it->second});
    }
    schema = FeatureSchema(std::move(inputs), Feature{output_name, output_kind}, first.functor);
  }

  KnowledgeBase kb;
  kb.schema = schema;
  kb.ordering = Ordering::Ordered;
  for (ParsedClause& clause : clauses) {
    Rule rule;
    rule.precondition = std::move(clause.precondition);
    if (clause.head_constant) {
      rule.postcondition = std::move(*clause.head_constant);
    } else {
      LinTerms& terms = *clause.is_expr;
      std::erase_if(terms.coefficients, [](const auto& c) { return c.second == 0.0; });
      if (terms.coefficients.empty())
        rule.postcondition = ConstantValue{terms.intercept};
      else
        rule.postcondition = LinearExpr{terms.intercept, std::move(terms.coefficients)};
    }
    kb.rules.push_back(std::move(rule));
  }
  kb.validate();
  result.kb = std::move(kb);
  return result;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

namespace {

std::string render_value(const Value& v) {
  return is_number(v) ? format_number(as_number(v)) : as_category(v);
}

std::string render_linexpr(const LinearExpr& lin) {
  std::string out;
  bool first = true;
  if (lin.intercept != 0.0 || lin.coefficients.empty()) {
    out += format_number(lin.intercept);
    first = false;
  }
  for (const auto& [name, coeff] : lin.coefficients) {
    if (first) {
      out += format_number(coeff) + "*" + name;
      first = false;
    } else {
      out += coeff < 0 ? " - " : " + ";
      out += format_number(std::abs(coeff)) + "*" + name;
    }
  }
  return out;
}

}  // namespace

std::string render_literal(const Literal& lit) {
  if (auto* cmp = lit.get_if<Comparison>())
    return cmp->feature + " " + cmp_op_text(cmp->op) + " " + render_value(cmp->constant);
  if (auto* iv = lit.get_if<Interval>())
    return iv->feature + " in [" + format_number(iv->low) + ", " + format_number(iv->high) + "]";
  if (auto* set = lit.get_if<SetMembership>()) {
    std::string out = set->feature;
    out += set->polarity == SetPolarity::In ? " in {" : " not_in {";
    for (std::size_t i = 0; i < set->values.size(); ++i) {
      if (i > 0) out += ", ";
      out += set->values[i];
    }
    return out + "}";
  }
  if (auto* m = lit.get_if<MOfN>()) {
    std::string out = std::to_string(m->m) + " of [";
    for (std::size_t i = 0; i < m->literals.size(); ++i) {
      if (i > 0) out += ", ";
      out += render_literal(m->literals[i]);
    }
    return out + "]";
  }
  if (auto* fz = lit.get_if<Fuzzy>()) return fz->feature + " is_label " + fz->label;
  const auto* ob = lit.get_if<Oblique>();
  std::string out;
  bool first = true;
  for (const auto& [name, coeff] : ob->coefficients) {
    if (first) {
      out += format_number(coeff) + "*" + name;
      first = false;
    } else {
      out += coeff < 0 ? " - " : " + ";
      out += format_number(std::abs(coeff)) + "*" + name;
    }
  }
  return out + " " + cmp_op_text(ob->op) + " " + format_number(ob->threshold);
}

std::string render_postcondition(const Postcondition& post, const std::string& output_name) {
  if (auto* lin = std::get_if<LinearExpr>(&post))
    return output_name + " is " + render_linexpr(*lin);
  if (auto* cv = std::get_if<ConstantValue>(&post))
    return output_name + " is " + format_number(cv->value);
  return output_name + " is " + std::get<ConstantClass>(post).label;
}

std::string render_theory(const KnowledgeBase& kb) {
  std::ostringstream out;
  const FeatureSchema& schema = kb.schema;
  for (const Feature& f : schema.inputs())
    if (!(std::isupper(static_cast<unsigned char>(f.name[0])) || f.name[0] == '_'))
      throw Error("feature name is not renderable as a variable: " + f.name);

  for (const Rule& rule : kb.rules) {
    const auto* lin = std::get_if<LinearExpr>(&rule.postcondition);
    out << schema.functor() << "(";
    for (const Feature& f : schema.inputs()) out << f.name << ", ";
    if (lin != nullptr)
      out << schema.output().name;
    else if (auto* cv = std::get_if<ConstantValue>(&rule.postcondition))
      out << format_number(cv->value);
    else
      out << std::get<ConstantClass>(rule.postcondition).label;
    out << ")";

    const bool has_body = !rule.precondition.empty() || lin != nullptr;
    if (has_body) {
      out << " :-\n    ";
      bool first = true;
      for (const Literal& lit : rule.precondition) {
        if (!first) out << ", ";
        out << render_literal(lit);
        first = false;
      }
      if (lin != nullptr) {
        if (!first) out << ", ";
        out << schema.output().name << " is " << render_linexpr(*lin);
      }
    }
    out << ".\n";
  }
  return out.str();
}

Literal parse_literal_text(std::string_view text) {
  Parser parser(text);
  return parser.single_literal();
}

Postcondition parse_postcondition_text(std::string_view text) {
  std::string trimmed(text);
  const auto first = trimmed.find_first_not_of(" \t");
  const auto last = trimmed.find_last_not_of(" \t");
  if (first == std::string::npos) throw Error("empty postcondition");
  trimmed = trimmed.substr(first, last - first + 1);
  // A bare category label; numbers and expressions go through the parser.
  if (std::islower(static_cast<unsigned char>(trimmed[0]))) return ConstantClass{trimmed};
  Parser parser(trimmed);
  LinTerms terms = parser.single_linexpr();
  std::erase_if(terms.coefficients, [](const auto& c) { return c.second == 0.0; });
  if (terms.coefficients.empty()) return ConstantValue{terms.intercept};
  return LinearExpr{terms.intercept, std::move(terms.coefficients)};
}

bool semantically_equal(const KnowledgeBase& a, const KnowledgeBase& b) {
  if (!a.schema.same_features(b.schema) || a.schema.functor() != b.schema.functor()) return false;
  if (a.ordering != b.ordering || a.rules.size() != b.rules.size()) return false;
  for (std::size_t i = 0; i < a.rules.size(); ++i) {
    const Rule& ra = a.rules[i];
    const Rule& rb = b.rules[i];
    if (!postcondition_equal(ra.postcondition, rb.postcondition)) return false;
    if (ra.precondition.size() != rb.precondition.size()) return false;
    std::vector<bool> used(rb.precondition.size(), false);
    for (const Literal& lit : ra.precondition) {
      bool matched = false;
      for (std::size_t j = 0; j < rb.precondition.size(); ++j) {
        if (!used[j] && rb.precondition[j] == lit) {
          used[j] = true;
          matched = true;
          break;
        }
      }
      if (!matched) return false;
    }
  }
  return true;
}

}  // namespace skq
