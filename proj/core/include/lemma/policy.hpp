#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "lemma/clause.hpp"
#include "lemma/term.hpp"

namespace lemma {

// `lit` is delayed when it unifies with `pattern` and every variable in
// `must_be_unbound` is still unbound afterwards.
struct DelayGuard {
  Term pattern;
  std::vector<VarId> must_be_unbound;
};

// `to` is `from` with zero or more subterms replaced by fresh, unshared
// variables.
struct AbstractionTemplate {
  Goal from;
  Goal to;
};

struct Policy {
  std::vector<Term> memo_patterns;
  std::vector<DelayGuard> delay_guards;
  std::vector<AbstractionTemplate> abstraction_templates;

  bool empty() const {
    return memo_patterns.empty() && delay_guards.empty() && abstraction_templates.empty();
  }
};

// Checks the drop-only shape of an abstraction template.
bool is_drop_only(const Goal& from, const Goal& to);

struct ProgramTag {
  friend bool operator==(const ProgramTag&, const ProgramTag&) = default;
};
struct SolutionTag {
  friend bool operator==(const SolutionTag&, const SolutionTag&) = default;
};
// Suspend on `goal` (a sub-multiset of the body); `rest` is the remainder.
struct TableTag {
  Goal goal;
  Goal rest;
  friend bool operator==(const TableTag&, const TableTag&) = default;
};

using Tag = std::variant<ProgramTag, TableTag, SolutionTag>;

char tag_letter(const Tag& tag);

bool is_delayed(const Term& lit, const Policy& policy, const Bindings& b = {});
bool is_memo(const Term& lit, const Policy& policy, const Bindings& b = {});

// Control rule: leftmost memo literal -> Table([G], rest); otherwise any
// non-delayed literal -> Program; otherwise Solution.
Tag control(const Goal& body, const Policy& policy, const Bindings& b = {});

struct Selection {
  std::size_t index;
  Term literal;
  Goal rest;
};

// Selection rule: leftmost non-delayed literal. nullopt when every literal is
// delayed (or the body is empty).
std::optional<Selection> select_program_literal(const Goal& body, const Policy& policy,
                                                const Bindings& b = {});

// Applies the first matching abstraction template; fresh variables for the
// dropped positions come from `supply`. Returns `g` unchanged when nothing
// matches.
Goal abstract_goal(const Goal& g, const Policy& policy, VarSupply& supply);

}  // namespace lemma
