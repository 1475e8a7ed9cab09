#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "lemma/term.hpp"

namespace lemma {

// Generalized clause: the head is read conjunctively and holds at least one
// relational atom; the body may be empty.
struct Clause {
  Goal head;
  Goal body;

  bool is_fact() const { return body.empty(); }
  friend bool operator==(const Clause&, const Clause&) = default;
};

// Fresh variant of `c` whose variables come from `supply`.
Clause rename_apart(const Clause& c, VarSupply& supply);

Clause resolve_clause_terms(const Clause& c, const Bindings& b);

// Key over head and body together; equal iff the clauses are variants.
CanonicalKey clause_key(const Clause& c);

// Clause database indexed by functor/arity of the first head atom. Clauses
// of one predicate keep their source order.
class Program {
 public:
  void add(Clause c);

  std::span<const Clause> clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  const Clause& clause(std::size_t i) const { return clauses_[i]; }

  // Indices (into clauses()) of clauses whose first head atom has this
  // functor and arity, in source order.
  std::span<const std::size_t> candidates(Symbol functor, std::size_t arity) const;
  std::span<const std::size_t> candidates(const Term& literal) const;

  // Largest variable id occurring in any clause, plus one.
  VarId var_bound() const { return var_bound_; }

 private:
  struct Key {
    const std::string* functor;
    std::size_t arity;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<const void*>{}(k.functor) * 31 + k.arity;
    }
  };

  std::vector<Clause> clauses_;
  std::unordered_map<Key, std::vector<std::size_t>, KeyHash> index_;
  VarId var_bound_ = 0;
};

}  // namespace lemma
