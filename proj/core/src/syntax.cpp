#include "lemma/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

namespace lemma {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      detail_(message),
      line_(line),
      column_(column) {}

namespace {

enum class TokenKind { Name, Quoted, Var, Number, Punct, Op, End, Eof };

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  int column;
  bool layout_before;

  bool is_punct(char c) const { return kind == TokenKind::Punct && text.size() == 1 && text[0] == c; }
  bool is_op(std::string_view op) const { return kind == TokenKind::Op && text == op; }
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> tokenize() {
    std::vector<Token> out;
    for (;;) {
      bool layout = skip_layout();
      Token tok = next(layout);
      bool done = tok.kind == TokenKind::Eof;
      out.push_back(std::move(tok));
      if (done) return out;
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool at_end() const { return pos_ >= text_.size(); }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  bool skip_layout() {
    bool skipped = false;
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        skipped = true;
      } else if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
        skipped = true;
      } else {
        break;
      }
    }
    return skipped;
  }

  [[noreturn]] void fail(const std::string& message, int line, int column) const {
    throw ParseError(message, line, column);
  }

  static bool is_alnum(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Token next(bool layout) {
    const int line = line_;
    const int column = column_;
    auto make = [&](TokenKind kind, std::string text) {
      return Token{kind, std::move(text), line, column, layout};
    };
    if (at_end()) return make(TokenKind::Eof, "");
    char c = peek();
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string s;
      while (!at_end() && is_alnum(peek())) s += advance();
      return make(TokenKind::Name, std::move(s));
    }
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (!at_end() && is_alnum(peek())) s += advance();
      return make(TokenKind::Var, std::move(s));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += advance();
      if (!at_end() && is_alnum(peek())) fail("malformed number", line, column);
      return make(TokenKind::Number, std::move(s));
    }
    if (c == '\'') {
      advance();
      std::string s;
      for (;;) {
        if (at_end()) fail("unterminated quoted atom", line, column);
        char q = advance();
        if (q == '\'') {
          if (peek() == '\'') {
            advance();
            s += '\'';
            continue;
          }
          break;
        }
        if (q == '\\') {
          if (at_end()) fail("unterminated quoted atom", line, column);
          char e = advance();
          switch (e) {
            case 'n': s += '\n'; break;
            case 't': s += '\t'; break;
            case '\\': s += '\\'; break;
            case '\'': s += '\''; break;
            default: fail(std::string("unknown escape \\") + e, line_, column_ - 1);
          }
          continue;
        }
        s += q;
      }
      return make(TokenKind::Quoted, std::move(s));
    }
    switch (c) {
      case '(': case ')': case '[': case ']': case ',': case '|':
        advance();
        return make(TokenKind::Punct, std::string(1, c));
      case '\\': case '/': case '#':
        advance();
        return make(TokenKind::Op, std::string(1, c));
      case ':':
        if (peek(1) == ':' && peek(2) == '-') {
          advance(); advance(); advance();
          return make(TokenKind::Op, "::-");
        }
        if (peek(1) == '-') {
          advance(); advance();
          return make(TokenKind::Op, ":-");
        }
        fail("unexpected ':'", line, column);
      case '.': {
        char after = peek(1);
        if (after == '\0' || after == '%' || std::isspace(static_cast<unsigned char>(after))) {
          advance();
          return make(TokenKind::End, ".");
        }
        fail("unexpected '.'", line, column);
      }
      default:
        fail(std::string("unexpected character '") + c + "'", line, column);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct Parsed {
  Term term;
  int priority;
};

struct InfixOp {
  int priority;
  int left_max;
  int right_max;
};

std::optional<InfixOp> infix_op(const Token& tok) {
  if (tok.kind != TokenKind::Op) return std::nullopt;
  if (tok.text == "/" || tok.text == "\\") return InfixOp{400, 400, 399};
  if (tok.text == "::-") return InfixOp{990, 989, 989};
  return std::nullopt;
}

std::optional<std::vector<Term>> list_elements(const Term& t) {
  std::vector<Term> items;
  Term cur = t;
  while (cur.has_functor(sym::cons(), 2)) {
    items.push_back(cur.arg(0));
    cur = cur.arg(1);
  }
  if (!cur.is_atom(sym::nil())) return std::nullopt;
  return items;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, VarSupply& supply) : tokens_(std::move(tokens)), supply_(&supply) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool at_eof() const { return peek().kind == TokenKind::Eof; }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, at.line, at.column);
  }

  void expect_punct(char c) {
    if (!peek().is_punct(c)) fail(std::string("expected '") + c + "'", peek());
    advance();
  }

  void reset_scope() {
    vars_.clear();
    names_.clear();
  }
  const VarNames& names() const { return names_; }
  void seed(const VarNames& names) {
    for (const auto& [name, id] : names) {
      if (vars_.try_emplace(name, id).second) names_.emplace_back(name, id);
    }
  }

  Parsed parse(int max_priority) {
    Parsed left = primary(max_priority);
    for (;;) {
      auto op = infix_op(peek());
      if (!op || op->priority > max_priority || left.priority > op->left_max) break;
      Token tok = advance();
      Parsed right = parse(op->right_max);
      left = Parsed{Term::compound(tok.text, {left.term, right.term}), op->priority};
    }
    return left;
  }

 private:
  static bool is_delimiter(const Token& tok) {
    return tok.kind == TokenKind::End || tok.kind == TokenKind::Eof || tok.is_punct(')') ||
           tok.is_punct(',') || tok.is_punct(']') || tok.is_punct('|');
  }

  Term variable(const std::string& name) {
    if (name == "_") return supply_->fresh_var();
    auto [it, inserted] = vars_.try_emplace(name, 0);
    if (inserted) {
      it->second = supply_->fresh();
      names_.emplace_back(name, it->second);
    }
    return Term::variable(it->second);
  }

  Parsed primary(int max_priority) {
    const Token tok = advance();
    switch (tok.kind) {
      case TokenKind::Var:
        return {variable(tok.text), 0};
      case TokenKind::Number:
        return {Term::atom(tok.text), 0};
      case TokenKind::Name:
      case TokenKind::Quoted: {
        if (peek().is_punct('(') && !peek().layout_before) {
          advance();
          std::vector<Term> args;
          args.push_back(parse(999).term);
          while (peek().is_punct(',')) {
            advance();
            args.push_back(parse(999).term);
          }
          expect_punct(')');
          return {Term::compound(tok.text, std::move(args)), 0};
        }
        return {Term::atom(tok.text), 0};
      }
      case TokenKind::Punct:
        if (tok.is_punct('(')) {
          Term inner = parse(1200).term;
          expect_punct(')');
          return {inner, 0};
        }
        if (tok.is_punct('[')) return {list(), 0};
        fail("unexpected '" + tok.text + "'", tok);
      case TokenKind::Op: {
        if (is_delimiter(peek()) || infix_op(peek())) return {Term::atom(tok.text), 0};
        if (tok.text == "#") {
          if (max_priority < 300) fail("operator priority clash at '#'", tok);
          Parsed operand = parse(300);
          return {Term::compound(sym::hash(), {operand.term}), 300};
        }
        fail("unexpected operator '" + tok.text + "'", tok);
      }
      case TokenKind::End:
        fail("unexpected end of clause", tok);
      case TokenKind::Eof:
        fail("unexpected end of input", tok);
    }
    fail("unexpected token", tok);
  }

  Term list() {
    if (peek().is_punct(']')) {
      advance();
      return Term::atom(sym::nil());
    }
    std::vector<Term> items;
    items.push_back(parse(999).term);
    while (peek().is_punct(',')) {
      advance();
      items.push_back(parse(999).term);
    }
    std::optional<Term> tail;
    if (peek().is_punct('|')) {
      advance();
      tail = parse(999).term;
    }
    expect_punct(']');
    return tail ? Term::list(std::move(items), *tail) : Term::list(std::move(items));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  VarSupply* supply_;
  std::unordered_map<std::string, VarId> vars_;
  VarNames names_;
};

Goal goal_from(const Term& t, const Token& at, const char* what) {
  Goal g;
  if (auto items = list_elements(t)) {
    g = std::move(*items);
  } else {
    g.push_back(t);
  }
  for (const auto& lit : g) {
    if (lit.is_var()) throw ParseError(std::string(what) + " literal must not be a variable", at.line, at.column);
  }
  return g;
}

void add_directive(const Term& d, const Token& at, Policy& policy) {
  if (d.is_var()) throw ParseError("directive must be callable", at.line, at.column);
  const auto name = d.functor().name();
  if (name == "memo" && d.arity() == 1) {
    if (d.arg(0).is_var()) throw ParseError("memo pattern must be callable", at.line, at.column);
    policy.memo_patterns.push_back(d.arg(0));
    return;
  }
  if (name == "delay" && d.arity() == 2) {
    const Term& pattern = d.arg(0);
    if (pattern.is_var()) throw ParseError("delay pattern must be callable", at.line, at.column);
    auto guard_vars = list_elements(d.arg(1));
    if (!guard_vars) throw ParseError("delay guard must be a list of variables", at.line, at.column);
    std::vector<VarId> in_pattern;
    collect_vars(pattern, in_pattern);
    DelayGuard guard{pattern, {}};
    for (const auto& v : *guard_vars) {
      if (!v.is_var()) throw ParseError("delay guard must be a list of variables", at.line, at.column);
      if (std::find(in_pattern.begin(), in_pattern.end(), v.var()) == in_pattern.end()) {
        throw ParseError("delay guard variable does not occur in the pattern", at.line, at.column);
      }
      guard.must_be_unbound.push_back(v.var());
    }
    policy.delay_guards.push_back(std::move(guard));
    return;
  }
  if (name == "abstract" && d.arity() == 2) {
    AbstractionTemplate tmpl{goal_from(d.arg(0), at, "abstraction"), goal_from(d.arg(1), at, "abstraction")};
    if (!is_drop_only(tmpl.from, tmpl.to)) {
      throw ParseError("abstraction template may only replace subterms by fresh variables", at.line,
                       at.column);
    }
    policy.abstraction_templates.push_back(std::move(tmpl));
    return;
  }
  throw ParseError("unknown directive " + std::string(name) + "/" + std::to_string(d.arity()),
                   at.line, at.column);
}

Clause clause_from(const Term& t, const Token& at) {
  if (t.has_functor(sym::neck(), 2)) {
    auto body = list_elements(t.arg(1));
    if (!body) throw ParseError("clause body must be a list", at.line, at.column);
    Clause c{goal_from(t.arg(0), at, "head"), std::move(*body)};
    for (const auto& lit : c.body) {
      if (lit.is_var()) throw ParseError("body literal must not be a variable", at.line, at.column);
    }
    if (c.head.empty()) throw ParseError("clause head must contain a relational atom", at.line, at.column);
    return c;
  }
  if (t.is_var()) throw ParseError("clause head must not be a variable", at.line, at.column);
  return Clause{{t}, {}};
}

}  // namespace

LoadedProgram parse_program(std::string_view text) {
  VarSupply supply;
  Parser parser(Lexer(text).tokenize(), supply);
  LoadedProgram out;
  while (!parser.at_eof()) {
    parser.reset_scope();
    const Token start = parser.peek();
    if (start.is_op(":-")) {
      parser.advance();
      Term directive = parser.parse(1199).term;
      if (parser.peek().kind != TokenKind::End) parser.fail("expected '.' after directive", parser.peek());
      parser.advance();
      add_directive(directive, start, out.policy);
      continue;
    }
    Term t = parser.parse(1200).term;
    if (parser.peek().kind != TokenKind::End) parser.fail("expected '.' after clause", parser.peek());
    parser.advance();
    out.program.add(clause_from(t, start));
  }
  return out;
}

Term parse_term(std::string_view text, VarSupply& supply, VarNames* names) {
  Parser parser(Lexer(text).tokenize(), supply);
  if (names != nullptr) parser.seed(*names);
  Term t = parser.parse(1200).term;
  if (parser.peek().kind == TokenKind::End) parser.advance();
  if (!parser.at_eof()) parser.fail("unexpected trailing input", parser.peek());
  if (names != nullptr) *names = parser.names();
  return t;
}

Term parse_term(std::string_view text) {
  VarSupply supply;
  return parse_term(text, supply);
}

Goal parse_goal(std::string_view text, VarSupply& supply, VarNames* names) {
  Parser parser(Lexer(text).tokenize(), supply);
  if (names != nullptr) parser.seed(*names);
  const Token start = parser.peek();
  std::vector<Term> items;
  items.push_back(parser.parse(999).term);
  while (parser.peek().is_punct(',')) {
    parser.advance();
    items.push_back(parser.parse(999).term);
  }
  if (parser.peek().kind == TokenKind::End) parser.advance();
  if (!parser.at_eof()) parser.fail("unexpected trailing input", parser.peek());
  if (names != nullptr) *names = parser.names();
  Goal g;
  if (items.size() == 1) {
    g = goal_from(items.front(), start, "goal");
  } else {
    for (auto& t : items) {
      if (t.is_var()) throw ParseError("goal literal must not be a variable", start.line, start.column);
      g.push_back(std::move(t));
    }
  }
  if (g.empty()) throw ParseError("goal must not be empty", start.line, start.column);
  return g;
}

Goal parse_goal(std::string_view text) {
  VarSupply supply;
  return parse_goal(text, supply);
}

Clause parse_clause(std::string_view text) {
  std::string source(text);
  while (!source.empty() && std::isspace(static_cast<unsigned char>(source.back()))) source.pop_back();
  if (source.empty() || source.back() != '.') source += '.';
  LoadedProgram p = parse_program(source);
  if (p.program.size() != 1 || !p.policy.empty()) {
    throw ParseError("expected exactly one clause", 1, 1);
  }
  return p.program.clause(0);
}

// ---------------------------------------------------------------------------
// Writing

std::string quote_atom(std::string_view name) {
  if (name == "[]") return std::string(name);
  bool plain = !name.empty() && std::islower(static_cast<unsigned char>(name[0]));
  bool digits = !name.empty();
  for (char c : name) {
    unsigned char u = static_cast<unsigned char>(c);
    plain = plain && (std::isalnum(u) || c == '_');
    digits = digits && std::isdigit(u);
  }
  if (plain || digits) return std::string(name);
  std::string out = "'";
  for (char c : name) {
    switch (c) {
      case '\'': out += "\\'"; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '\'';
  return out;
}

std::string TermWriter::var_name(VarId id) {
  auto it = names_.find(id);
  if (it != names_.end()) return it->second;
  const std::size_t n = names_.size();
  std::string name(1, static_cast<char>('A' + n % 26));
  if (n >= 26) name += std::to_string(n / 26);
  names_.emplace(id, name);
  return name;
}

void TermWriter::write_atom(std::string_view name, std::string& out) const {
  auto it = abbrev_.find(name);
  out += quote_atom(it == abbrev_.end() ? name : std::string_view(it->second));
}

void TermWriter::write(const Term& t, int max_priority, std::string& out) {
  if (t.is_var()) {
    out += var_name(t.var());
    return;
  }
  const Symbol f = t.functor();
  if (t.arity() == 0) {
    write_atom(f.name(), out);
    return;
  }
  if (f == sym::cons() && t.arity() == 2) {
    out += '[';
    Term cur = t;
    bool first = true;
    while (cur.has_functor(sym::cons(), 2)) {
      if (!first) out += ',';
      first = false;
      write(cur.arg(0), 999, out);
      cur = cur.arg(1);
    }
    if (!cur.is_atom(sym::nil())) {
      out += '|';
      write(cur, 999, out);
    }
    out += ']';
    return;
  }
  if ((f == sym::slash() || f == sym::backslash()) && t.arity() == 2) {
    const bool paren = max_priority < 400;
    if (paren) out += '(';
    write(t.arg(0), 400, out);
    out += f.name();
    write(t.arg(1), 399, out);
    if (paren) out += ')';
    return;
  }
  if (f == sym::neck() && t.arity() == 2) {
    const bool paren = max_priority < 990;
    if (paren) out += '(';
    write(t.arg(0), 989, out);
    out += " ::- ";
    write(t.arg(1), 989, out);
    if (paren) out += ')';
    return;
  }
  if (f == sym::hash() && t.arity() == 1) {
    const bool paren = max_priority < 300;
    if (paren) out += '(';
    out += '#';
    write(t.arg(0), 300, out);
    if (paren) out += ')';
    return;
  }
  write_atom(f.name(), out);
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i != 0) out += ',';
    write(t.arg(i), 999, out);
  }
  out += ')';
}

std::string TermWriter::term(const Term& t) {
  std::string out;
  write(t, 1200, out);
  return out;
}

std::string TermWriter::literals(std::span<const Term> g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i != 0) out += ", ";
    write(g[i], 999, out);
  }
  return out;
}

std::string TermWriter::goal(std::span<const Term> g) { return "[" + literals(g) + "]"; }

std::string TermWriter::clause(const Clause& c) {
  std::string out;
  if (c.head.size() == 1) {
    write(c.head.front(), 989, out);
  } else {
    out += goal(c.head);
  }
  out += " ::- ";
  out += goal(c.body);
  return out;
}

std::string format_term(const Term& t) { return TermWriter().term(t); }

std::string format_clause(const Clause& c) { return TermWriter().clause(c); }

}  // namespace lemma
