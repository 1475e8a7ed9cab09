#include "lemma/clause.hpp"

#include <algorithm>
#include <stdexcept>

namespace lemma {

Clause rename_apart(const Clause& c, VarSupply& supply) {
  Renamer rename(supply);
  Clause out;
  out.head = rename(c.head);
  out.body = rename(c.body);
  return out;
}

Clause resolve_clause_terms(const Clause& c, const Bindings& b) {
  return Clause{resolve_goal(c.head, b), resolve_goal(c.body, b)};
}

CanonicalKey clause_key(const Clause& c) {
  // A marker atom separates head and body so [a] ::- [b] and [a, b] ::- []
  // cannot collide.
  Goal joined;
  joined.reserve(c.head.size() + c.body.size() + 1);
  joined.insert(joined.end(), c.head.begin(), c.head.end());
  joined.push_back(Term::atom(sym::neck()));
  joined.insert(joined.end(), c.body.begin(), c.body.end());
  return canonical_key(joined);
}

void Program::add(Clause c) {
  if (c.head.empty()) throw std::invalid_argument("clause head must contain a relational atom");
  if (c.head.front().is_var()) throw std::invalid_argument("clause head atom must not be a variable");
  std::vector<VarId> vars;
  for (const auto& t : c.head) collect_vars(t, vars);
  for (const auto& t : c.body) collect_vars(t, vars);
  for (VarId v : vars) var_bound_ = std::max(var_bound_, v + 1);
  const Term& first = c.head.front();
  index_[Key{first.functor().address(), first.arity()}].push_back(clauses_.size());
  clauses_.push_back(std::move(c));
}

std::span<const std::size_t> Program::candidates(Symbol functor, std::size_t arity) const {
  auto it = index_.find(Key{functor.address(), arity});
  if (it == index_.end()) return {};
  return it->second;
}

std::span<const std::size_t> Program::candidates(const Term& literal) const {
  if (literal.is_var()) return {};
  return candidates(literal.functor(), literal.arity());
}

}  // namespace lemma
