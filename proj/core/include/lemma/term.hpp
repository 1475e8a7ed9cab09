#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lemma/symbol.hpp"

namespace lemma {

using VarId = std::uint32_t;

// Variable ids at or above this value are reserved for transient pattern
// copies (trial unification against policy patterns). Supplies never issue
// them.
inline constexpr VarId kScratchVarBase = 0x8000'0000u;

namespace detail {
struct TermNode;
}

// Immutable first-order term: a variable or a functor applied to arguments.
// Atoms and integers are zero-arity applications; lists are '.'/2 chains
// ending in '[]'. Copies share structure.
class Term {
 public:
  static Term variable(VarId id);
  static Term atom(Symbol name);
  static Term atom(std::string_view name);
  static Term compound(Symbol functor, std::vector<Term> args);
  static Term compound(std::string_view functor, std::vector<Term> args);
  static Term list(std::vector<Term> items);
  static Term list(std::vector<Term> items, Term tail);

  bool is_var() const;
  VarId var() const;

  Symbol functor() const;
  std::size_t arity() const;
  std::span<const Term> args() const;
  const Term& arg(std::size_t i) const;

  bool is_atom() const { return !is_var() && arity() == 0; }
  bool is_atom(Symbol name) const { return is_atom() && functor() == name; }
  bool has_functor(Symbol name, std::size_t n) const {
    return !is_var() && functor() == name && arity() == n;
  }

  // True when no variable occurs anywhere in the term. Cached at construction.
  bool is_ground() const;

  std::size_t hash() const;

  // Structural equality (variables compare by id).
  friend bool operator==(const Term& a, const Term& b);

  const detail::TermNode* node() const { return node_.get(); }

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::TermNode> node_;
};

namespace detail {
struct TermNode {
  bool is_var = false;
  bool ground = true;
  VarId var = 0;
  const std::string* functor = nullptr;
  std::vector<Term> args;
  std::size_t hash = 0;
};
}  // namespace detail

inline bool Term::is_var() const { return node_->is_var; }
inline VarId Term::var() const { return node_->var; }
inline std::size_t Term::arity() const { return node_->args.size(); }
inline std::span<const Term> Term::args() const { return node_->args; }
inline const Term& Term::arg(std::size_t i) const { return node_->args[i]; }
inline bool Term::is_ground() const { return node_->ground; }
inline std::size_t Term::hash() const { return node_->hash; }

// Total order on terms (functor name, arity, arguments; variables first, by id).
// Used where a deterministic ordering of ground atoms is needed.
bool term_less(const Term& a, const Term& b);
struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return term_less(a, b); }
};

// A goal is a multiset of literals; list order only matters to selection.
using Goal = std::vector<Term>;

// Equality constraints as a triangular substitution. Copying is the undo
// mechanism: a failed unification works on a copy that is then dropped.
class Bindings {
 public:
  const Term* lookup(VarId id) const {
    auto it = map_.find(id);
    return it == map_.end() ? nullptr : &it->second;
  }
  void bind(VarId id, Term value) { map_.insert_or_assign(id, std::move(value)); }
  bool contains(VarId id) const { return map_.count(id) != 0; }
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  auto begin() const { return map_.begin(); }
  auto end() const { return map_.end(); }

 private:
  std::unordered_map<VarId, Term> map_;
};

enum class OccursCheck { On, Off };

// Dereferences the top level of `t` through variable bindings.
Term walk(const Term& t, const Bindings& b);

// Replaces every bound variable transitively. The result mentions only
// unbound variables.
Term resolve_term(const Term& t, const Bindings& b);
Goal resolve_goal(std::span<const Term> g, const Bindings& b);

// Most general unifier of t1 and t2 extending b; nullopt on clash or occurs
// violation.
std::optional<Bindings> unify(const Term& t1, const Term& t2, Bindings b,
                              OccursCheck occurs = OccursCheck::On);

// Element-wise unification of two goals of equal length.
std::optional<Bindings> unify_goals(std::span<const Term> g1, std::span<const Term> g2,
                                    Bindings b, OccursCheck occurs = OccursCheck::On);

// In-place variant; on failure `b` is left in an unspecified (but valid) state.
bool unify_into(const Term& t1, const Term& t2, Bindings& b,
                OccursCheck occurs = OccursCheck::On);

// One-way matching: binds only variables of `pattern` so that
// pattern instantiated equals `subject`. Variables of `subject` are treated
// as constants.
std::optional<Bindings> match(const Term& pattern, const Term& subject, Bindings b = {});

bool occurs_in(VarId id, const Term& t, const Bindings& b);
void collect_vars(const Term& t, std::vector<VarId>& out);

// Issues engine-global variable ids. Renaming never reuses an id.
class VarSupply {
 public:
  explicit VarSupply(VarId first = 0) : next_(first) {}
  VarId fresh();
  Term fresh_var() { return Term::variable(fresh()); }
  VarId peek() const { return next_; }

 private:
  VarId next_;
};

// Consistent renaming of variables to fresh ones. One Renamer per variant:
// every term passed through the same Renamer shares its variable map.
class Renamer {
 public:
  explicit Renamer(VarSupply& supply) : supply_(&supply) {}
  Term operator()(const Term& t);
  Goal operator()(std::span<const Term> g);

 private:
  VarSupply* supply_;
  std::unordered_map<VarId, VarId> map_;
};

// Ground rendering of a goal with variables replaced by first-occurrence
// ordinals. Equal keys iff the goals are variants (order-sensitive).
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string text) : text_(std::move(text)) {}
  const std::string& text() const { return text_; }
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::string text_;
};

CanonicalKey canonical_key(std::span<const Term> goal);
CanonicalKey canonical_key(const Term& t);

// True when a and b are alphabetic variants of each other.
bool is_variant(std::span<const Term> a, std::span<const Term> b);
bool is_variant(const Term& a, const Term& b);

}  // namespace lemma

template <>
struct std::hash<lemma::Term> {
  std::size_t operator()(const lemma::Term& t) const noexcept { return t.hash(); }
};

template <>
struct std::hash<lemma::CanonicalKey> {
  std::size_t operator()(const lemma::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.text());
  }
};
