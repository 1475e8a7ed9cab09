#include "lemma/policy.hpp"

#include <unordered_map>

namespace lemma {

namespace {

using ScratchMap = std::unordered_map<VarId, VarId>;

// Copies a policy pattern into the reserved variable range so trial
// unification cannot alias variables of the literal under test.
Term to_scratch(const Term& t, ScratchMap& map) {
  if (t.is_ground()) return t;
  if (t.is_var()) {
    auto [it, inserted] = map.try_emplace(t.var(), 0);
    if (inserted) it->second = kScratchVarBase + static_cast<VarId>(map.size() - 1);
    return Term::variable(it->second);
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(to_scratch(a, map));
  return Term::compound(t.functor(), std::move(args));
}

Term freshen_scratch(const Term& t, std::unordered_map<VarId, VarId>& map, VarSupply& supply) {
  if (t.is_ground()) return t;
  if (t.is_var()) {
    if (t.var() < kScratchVarBase) return t;
    auto [it, inserted] = map.try_emplace(t.var(), 0);
    if (inserted) it->second = supply.fresh();
    return Term::variable(it->second);
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(freshen_scratch(a, map, supply));
  return Term::compound(t.functor(), std::move(args));
}

void count_vars(const Term& t, std::unordered_map<VarId, int>& counts) {
  std::vector<VarId> vars;
  collect_vars(t, vars);
  for (VarId v : vars) ++counts[v];
}

bool drop_only(const Term& from, const Term& to, const std::unordered_map<VarId, int>& from_counts,
               const std::unordered_map<VarId, int>& to_counts) {
  if (to.is_var()) {
    if (from.is_var() && from.var() == to.var()) return true;
    auto in_to = to_counts.find(to.var());
    bool unshared = in_to != to_counts.end() && in_to->second == 1;
    return unshared && from_counts.count(to.var()) == 0;
  }
  if (from.is_var()) return false;
  if (from.functor() != to.functor() || from.arity() != to.arity()) return false;
  for (std::size_t i = 0; i < from.arity(); ++i) {
    if (!drop_only(from.arg(i), to.arg(i), from_counts, to_counts)) return false;
  }
  return true;
}

}  // namespace

bool is_drop_only(const Goal& from, const Goal& to) {
  if (from.size() != to.size()) return false;
  std::unordered_map<VarId, int> from_counts;
  std::unordered_map<VarId, int> to_counts;
  for (const auto& t : from) count_vars(t, from_counts);
  for (const auto& t : to) count_vars(t, to_counts);
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (!drop_only(from[i], to[i], from_counts, to_counts)) return false;
  }
  return true;
}

char tag_letter(const Tag& tag) {
  if (std::holds_alternative<ProgramTag>(tag)) return 'P';
  if (std::holds_alternative<TableTag>(tag)) return 'T';
  return 'S';
}

bool is_delayed(const Term& lit, const Policy& policy, const Bindings& b) {
  const Term subject = resolve_term(lit, b);
  for (const auto& guard : policy.delay_guards) {
    ScratchMap map;
    const Term pattern = to_scratch(guard.pattern, map);
    auto trial = unify(pattern, subject, Bindings{});
    if (!trial) continue;
    bool all_unbound = true;
    for (VarId v : guard.must_be_unbound) {
      auto it = map.find(v);
      if (it == map.end()) continue;
      if (!walk(Term::variable(it->second), *trial).is_var()) {
        all_unbound = false;
        break;
      }
    }
    if (all_unbound) return true;
  }
  return false;
}

bool is_memo(const Term& lit, const Policy& policy, const Bindings& b) {
  const Term subject = resolve_term(lit, b);
  for (const auto& pattern : policy.memo_patterns) {
    ScratchMap map;
    if (unify(to_scratch(pattern, map), subject, Bindings{})) return true;
  }
  return false;
}

Tag control(const Goal& body, const Policy& policy, const Bindings& b) {
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (!is_memo(body[i], policy, b)) continue;
    TableTag tag;
    tag.goal.push_back(body[i]);
    for (std::size_t j = 0; j < body.size(); ++j) {
      if (j != i) tag.rest.push_back(body[j]);
    }
    return tag;
  }
  for (const auto& lit : body) {
    if (!is_delayed(lit, policy, b)) return ProgramTag{};
  }
  return SolutionTag{};
}

std::optional<Selection> select_program_literal(const Goal& body, const Policy& policy,
                                                const Bindings& b) {
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (is_delayed(body[i], policy, b)) continue;
    Selection sel{i, body[i], {}};
    for (std::size_t j = 0; j < body.size(); ++j) {
      if (j != i) sel.rest.push_back(body[j]);
    }
    return sel;
  }
  return std::nullopt;
}

Goal abstract_goal(const Goal& g, const Policy& policy, VarSupply& supply) {
  for (const auto& tmpl : policy.abstraction_templates) {
    if (tmpl.from.size() != g.size()) continue;
    ScratchMap map;
    Goal from;
    Goal to;
    for (const auto& t : tmpl.from) from.push_back(to_scratch(t, map));
    for (const auto& t : tmpl.to) to.push_back(to_scratch(t, map));
    std::optional<Bindings> b = Bindings{};
    for (std::size_t i = 0; i < g.size() && b; ++i) b = match(from[i], g[i], std::move(*b));
    if (!b) continue;
    std::unordered_map<VarId, VarId> fresh;
    Goal out;
    out.reserve(to.size());
    for (const auto& t : to) out.push_back(freshen_scratch(resolve_term(t, *b), fresh, supply));
    return out;
  }
  return g;
}

}  // namespace lemma
