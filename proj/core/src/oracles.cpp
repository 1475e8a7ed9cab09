#include "lemma/oracles.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>

namespace lemma {

namespace {

struct Frame {
  Goal goals;     // resolved, leftmost first
  Goal instance;  // query instance, resolved
  std::size_t depth;
};

}  // namespace

OracleResult sld_solve(const Program& program, const Policy& policy, const Goal& query,
                       std::size_t depth, const SldOptions& options) {
  if (depth == 0) throw std::invalid_argument("sld_solve depth must be positive");
  OracleResult result;

  std::vector<VarId> query_vars;
  for (const auto& t : query) collect_vars(t, query_vars);
  VarId bound = program.var_bound();
  for (VarId v : query_vars) bound = std::max(bound, v + 1);
  VarSupply supply(bound);

  std::vector<Frame> stack;
  stack.push_back(Frame{query, query, 0});
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();

    auto chosen = std::find_if(frame.goals.begin(), frame.goals.end(),
                               [&](const Term& lit) { return !is_delayed(lit, policy); });
    if (chosen == frame.goals.end()) {
      OracleAnswer answer;
      answer.residual = frame.goals;
      answer.instance = frame.instance;
      std::optional<Bindings> matched = Bindings{};
      for (std::size_t i = 0; i < query.size() && matched; ++i) {
        matched = match(query[i], frame.instance[i], std::move(*matched));
      }
      if (matched) {
        for (const auto& [var, value] : *matched) {
          if (!(value.is_var() && value.var() == var)) answer.bindings.bind(var, value);
        }
      }
      result.answers.push_back(std::move(answer));
      continue;
    }
    if (frame.depth >= depth) {
      result.exhausted = false;
      continue;
    }

    const std::size_t selected = static_cast<std::size_t>(chosen - frame.goals.begin());
    const auto candidates = program.candidates(*chosen);
    std::vector<Frame> children;
    for (std::size_t k : candidates) {
      const Clause& clause = program.clause(k);
      if (clause.head.size() != 1) continue;
      if (result.steps >= options.max_steps) {
        result.exhausted = false;
        return result;
      }
      ++result.steps;
      Renamer rename(supply);
      Term head = rename(clause.head.front());
      Goal body = rename(clause.body);
      Bindings b;
      if (!unify_into(frame.goals[selected], head, b, options.occurs_check)) continue;
      Frame child;
      child.depth = frame.depth + 1;
      for (const auto& lit : body) child.goals.push_back(resolve_term(lit, b));
      for (std::size_t i = 0; i < frame.goals.size(); ++i) {
        if (i != selected) child.goals.push_back(resolve_term(frame.goals[i], b));
      }
      child.instance = resolve_goal(frame.instance, b);
      children.push_back(std::move(child));
    }
    // Reverse so the first program clause is explored first.
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  return result;
}

namespace {

bool is_flat(const Term& atom) {
  for (const auto& a : atom.args()) {
    if (!a.is_var() && a.arity() != 0) return false;
  }
  return true;
}

using Subst = std::map<VarId, Term>;

// Matches a flat body atom against a ground fact, extending `s`.
bool match_fact(const Term& atom, const Term& fact, Subst& s) {
  if (atom.functor() != fact.functor() || atom.arity() != fact.arity()) return false;
  for (std::size_t i = 0; i < atom.arity(); ++i) {
    const Term& a = atom.arg(i);
    const Term& f = fact.arg(i);
    if (a.is_var()) {
      auto [it, inserted] = s.try_emplace(a.var(), f);
      if (!inserted && !(it->second == f)) return false;
    } else if (!(a == f)) {
      return false;
    }
  }
  return true;
}

Term instantiate(const Term& atom, const Subst& s) {
  std::vector<Term> args;
  for (const auto& a : atom.args()) args.push_back(a.is_var() ? s.at(a.var()) : a);
  return Term::compound(atom.functor(), std::move(args));
}

void join(const Clause& rule, std::size_t i, Subst& s, const std::vector<Term>& facts,
          std::vector<Term>& out) {
  if (i == rule.body.size()) {
    out.push_back(instantiate(rule.head.front(), s));
    return;
  }
  for (const auto& fact : facts) {
    Subst extended = s;
    if (match_fact(rule.body[i], fact, extended)) join(rule, i + 1, extended, facts, out);
  }
}

}  // namespace

GroundAtoms datalog_fixpoint(const Program& program) {
  std::vector<const Clause*> rules;
  GroundAtoms derived;
  for (const auto& c : program.clauses()) {
    if (c.head.size() != 1) throw NotDatalogError("multi-atom heads are not Datalog");
    std::vector<VarId> body_vars;
    for (const auto& lit : c.body) {
      if (!is_flat(lit)) throw NotDatalogError("compound argument in body literal");
      collect_vars(lit, body_vars);
    }
    const Term& head = c.head.front();
    if (!is_flat(head)) throw NotDatalogError("compound argument in clause head");
    std::vector<VarId> head_vars;
    collect_vars(head, head_vars);
    for (VarId v : head_vars) {
      if (std::find(body_vars.begin(), body_vars.end(), v) == body_vars.end()) {
        throw NotDatalogError("clause is not range-restricted");
      }
    }
    if (c.body.empty()) {
      derived.insert(head);
    } else {
      rules.push_back(&c);
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<Term> facts(derived.begin(), derived.end());
    std::vector<Term> produced;
    for (const Clause* rule : rules) {
      Subst s;
      join(*rule, 0, s, facts, produced);
    }
    for (auto& atom : produced) changed = derived.insert(std::move(atom)).second || changed;
  }
  return derived;
}

}  // namespace lemma
