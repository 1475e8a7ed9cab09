#include "lemma/term.hpp"

#include <stdexcept>
#include <utility>

namespace lemma {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::variable(VarId id) {
  auto node = std::make_shared<detail::TermNode>();
  node->is_var = true;
  node->ground = false;
  node->var = id;
  node->hash = mix(0x51ed27, id);
  return Term(std::move(node));
}

Term Term::atom(Symbol name) { return compound(name, {}); }

Term Term::atom(std::string_view name) { return atom(Symbol::intern(name)); }

Term Term::compound(Symbol functor, std::vector<Term> args) {
  auto node = std::make_shared<detail::TermNode>();
  node->functor = functor.address();
  std::size_t h = mix(std::hash<const void*>{}(node->functor), args.size());
  for (const auto& a : args) {
    node->ground = node->ground && a.is_ground();
    h = mix(h, a.hash());
  }
  node->hash = h;
  node->args = std::move(args);
  return Term(std::move(node));
}

Term Term::compound(std::string_view functor, std::vector<Term> args) {
  return compound(Symbol::intern(functor), std::move(args));
}

Term Term::list(std::vector<Term> items) { return list(std::move(items), atom(sym::nil())); }

Term Term::list(std::vector<Term> items, Term tail) {
  Term out = std::move(tail);
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    out = compound(sym::cons(), {*it, std::move(out)});
  }
  return out;
}

Symbol Term::functor() const {
  if (node_->is_var) throw std::logic_error("functor() on a variable");
  return Symbol(node_->functor);
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  if (a.is_var() || b.is_var()) return a.is_var() && b.is_var() && a.var() == b.var();
  if (a.node_->functor != b.node_->functor || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.arg(i) == b.arg(i))) return false;
  }
  return true;
}

bool term_less(const Term& a, const Term& b) {
  if (a.is_var() != b.is_var()) return a.is_var();
  if (a.is_var()) return a.var() < b.var();
  if (a.functor() != b.functor()) return a.functor().name() < b.functor().name();
  if (a.arity() != b.arity()) return a.arity() < b.arity();
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (term_less(a.arg(i), b.arg(i))) return true;
    if (term_less(b.arg(i), a.arg(i))) return false;
  }
  return false;
}

Term walk(const Term& t, const Bindings& b) {
  Term cur = t;
  while (cur.is_var()) {
    const Term* next = b.lookup(cur.var());
    if (next == nullptr) break;
    cur = *next;
  }
  return cur;
}

Term resolve_term(const Term& t, const Bindings& b) {
  if (t.is_ground()) return t;
  if (t.is_var()) {
    Term w = walk(t, b);
    return w.is_var() ? w : resolve_term(w, b);
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const auto& a : t.args()) {
    args.push_back(resolve_term(a, b));
    changed = changed || !(args.back().node() == a.node());
  }
  return changed ? Term::compound(t.functor(), std::move(args)) : t;
}

Goal resolve_goal(std::span<const Term> g, const Bindings& b) {
  Goal out;
  out.reserve(g.size());
  for (const auto& t : g) out.push_back(resolve_term(t, b));
  return out;
}

bool occurs_in(VarId id, const Term& t, const Bindings& b) {
  if (t.is_ground()) return false;
  Term w = walk(t, b);
  if (w.is_var()) return w.var() == id;
  for (const auto& a : w.args()) {
    if (occurs_in(id, a, b)) return true;
  }
  return false;
}

void collect_vars(const Term& t, std::vector<VarId>& out) {
  if (t.is_ground()) return;
  if (t.is_var()) {
    out.push_back(t.var());
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, out);
}

bool unify_into(const Term& t1, const Term& t2, Bindings& b, OccursCheck occurs) {
  std::vector<std::pair<Term, Term>> pending;
  pending.emplace_back(t1, t2);
  while (!pending.empty()) {
    auto [x, y] = std::move(pending.back());
    pending.pop_back();
    x = walk(x, b);
    y = walk(y, b);
    if (x.node() == y.node()) continue;
    if (x.is_var() && y.is_var() && x.var() == y.var()) continue;
    if (x.is_var() || y.is_var()) {
      const Term& var = x.is_var() ? x : y;
      const Term& value = x.is_var() ? y : x;
      if (occurs == OccursCheck::On && !value.is_var() && occurs_in(var.var(), value, b)) {
        return false;
      }
      b.bind(var.var(), value);
      continue;
    }
    if (x.functor() != y.functor() || x.arity() != y.arity()) return false;
    if (x.is_ground() && y.is_ground()) {
      if (!(x == y)) return false;
      continue;
    }
    for (std::size_t i = 0; i < x.arity(); ++i) pending.emplace_back(x.arg(i), y.arg(i));
  }
  return true;
}

std::optional<Bindings> unify(const Term& t1, const Term& t2, Bindings b, OccursCheck occurs) {
  if (!unify_into(t1, t2, b, occurs)) return std::nullopt;
  return b;
}

std::optional<Bindings> unify_goals(std::span<const Term> g1, std::span<const Term> g2,
                                    Bindings b, OccursCheck occurs) {
  if (g1.size() != g2.size()) return std::nullopt;
  for (std::size_t i = 0; i < g1.size(); ++i) {
    if (!unify_into(g1[i], g2[i], b, occurs)) return std::nullopt;
  }
  return b;
}

std::optional<Bindings> match(const Term& pattern, const Term& subject, Bindings b) {
  std::vector<std::pair<Term, Term>> pending;
  pending.emplace_back(pattern, subject);
  while (!pending.empty()) {
    auto [p, s] = std::move(pending.back());
    pending.pop_back();
    if (p.is_var()) {
      if (const Term* bound = b.lookup(p.var())) {
        if (!(*bound == s)) return std::nullopt;
      } else {
        b.bind(p.var(), s);
      }
      continue;
    }
    if (s.is_var()) return std::nullopt;
    if (p.functor() != s.functor() || p.arity() != s.arity()) return std::nullopt;
    for (std::size_t i = 0; i < p.arity(); ++i) pending.emplace_back(p.arg(i), s.arg(i));
  }
  return b;
}

VarId VarSupply::fresh() {
  if (next_ >= kScratchVarBase) throw std::overflow_error("variable supply exhausted");
  return next_++;
}

Term Renamer::operator()(const Term& t) {
  if (t.is_ground()) return t;
  if (t.is_var()) {
    auto [it, inserted] = map_.try_emplace(t.var(), 0);
    if (inserted) it->second = supply_->fresh();
    return Term::variable(it->second);
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back((*this)(a));
  return Term::compound(t.functor(), std::move(args));
}

Goal Renamer::operator()(std::span<const Term> g) {
  Goal out;
  out.reserve(g.size());
  for (const auto& t : g) out.push_back((*this)(t));
  return out;
}

namespace {

void write_key(const Term& t, std::unordered_map<VarId, std::size_t>& ordinals, std::string& out) {
  if (t.is_var()) {
    auto [it, inserted] = ordinals.try_emplace(t.var(), ordinals.size());
    out += '_';
    out += std::to_string(it->second);
    return;
  }
  auto name = t.functor().name();
  out += std::to_string(name.size());
  out += ':';
  out += name;
  if (t.arity() == 0) return;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i != 0) out += ',';
    write_key(t.arg(i), ordinals, out);
  }
  out += ')';
}

}  // namespace

CanonicalKey canonical_key(std::span<const Term> goal) {
  std::unordered_map<VarId, std::size_t> ordinals;
  std::string out;
  for (std::size_t i = 0; i < goal.size(); ++i) {
    if (i != 0) out += ';';
    write_key(goal[i], ordinals, out);
  }
  return CanonicalKey(std::move(out));
}

CanonicalKey canonical_key(const Term& t) { return canonical_key(std::span<const Term>(&t, 1)); }

bool is_variant(std::span<const Term> a, std::span<const Term> b) {
  return a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

bool is_variant(const Term& a, const Term& b) { return canonical_key(a) == canonical_key(b); }

}  // namespace lemma
