#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "lemma/clause.hpp"
#include "lemma/policy.hpp"
#include "lemma/term.hpp"

namespace lemma {

// Surface syntax, fixed operator table:
//
//   ::-   xfx 990
//   \  /  yfx 400
//   #     fy  300
//
// plus list sugar [a, b | T], quoted atoms, `%` line comments and the
// directives `:- memo(P).`, `:- delay(P, [V...]).`, `:- abstract(From, To).`

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  int line_;
  int column_;
};

struct LoadedProgram {
  Program program;
  Policy policy;
};

LoadedProgram parse_program(std::string_view text);

// Named variables read from a single term/goal, in first-occurrence order.
using VarNames = std::vector<std::pair<std::string, VarId>>;

// Variables are numbered from `supply`; pass the same supply to keep
// several parsed fragments apart. `names`, when given, is both read and
// extended: a name already listed there denotes the same variable.
Term parse_term(std::string_view text, VarSupply& supply, VarNames* names = nullptr);
Term parse_term(std::string_view text);

// A goal is either a bracketed list of literals or a comma-separated
// sequence; a trailing '.' is allowed.
Goal parse_goal(std::string_view text, VarSupply& supply, VarNames* names = nullptr);
Goal parse_goal(std::string_view text);

Clause parse_clause(std::string_view text);

// Renders terms with minimal parentheses. Variables are named A, B, ... Z,
// A1, ... by first occurrence across everything written by one writer, so a
// writer used for a whole clause names its variables consistently.
class TermWriter {
 public:
  TermWriter() = default;

  // Display-only renaming of atoms/functors (e.g. add_adjuncts -> add).
  void set_abbreviations(std::map<std::string, std::string, std::less<>> abbrev) {
    abbrev_ = std::move(abbrev);
  }

  std::string term(const Term& t);
  // Literals joined by ", " without brackets.
  std::string literals(std::span<const Term> g);
  // "[l1, l2]".
  std::string goal(std::span<const Term> g);
  // "H ::- [B1, B2]"; a multi-atom head is written as a list.
  std::string clause(const Clause& c);

  std::string var_name(VarId id);

 private:
  void write(const Term& t, int max_priority, std::string& out);
  void write_atom(std::string_view name, std::string& out) const;

  std::unordered_map<VarId, std::string> names_;
  std::map<std::string, std::string, std::less<>> abbrev_;
};

std::string format_term(const Term& t);
std::string format_clause(const Clause& c);

// Quotes an atom name when it is not a plain lowercase identifier/number.
std::string quote_atom(std::string_view name);

}  // namespace lemma
