#include "lemma/engine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace lemma {

std::vector<Goal> ProofResult::gamma_bodies() const {
  std::vector<Goal> out;
  out.reserve(gamma.size());
  for (const auto& a : gamma) out.push_back(a.clause.body);
  return out;
}

std::optional<Clause> resolve_clause(const Clause& c0, const Clause& c1,
                                     std::span<const std::size_t> on, VarSupply& supply,
                                     OccursCheck occurs) {
  if (on.empty()) throw EngineError("resolution needs at least one literal");
  std::vector<bool> used(c0.body.size(), false);
  for (std::size_t i : on) {
    if (i >= c0.body.size() || used[i]) throw EngineError("invalid literal selection");
    used[i] = true;
  }
  if (c1.head.size() != on.size()) return std::nullopt;

  const Clause variant = rename_apart(c1, supply);
  Bindings b;
  for (std::size_t k = 0; k < on.size(); ++k) {
    if (!unify_into(c0.body[on[k]], variant.head[k], b, occurs)) return std::nullopt;
  }
  Clause out;
  out.head = resolve_goal(c0.head, b);
  out.body.reserve(variant.body.size() + c0.body.size() - on.size());
  for (const auto& lit : variant.body) out.body.push_back(resolve_term(lit, b));
  for (std::size_t i = 0; i < c0.body.size(); ++i) {
    if (!used[i]) out.body.push_back(resolve_term(c0.body[i], b));
  }
  return out;
}

namespace {

VarId var_bound(std::span<const Term> terms) {
  std::vector<VarId> vars;
  for (const auto& t : terms) collect_vars(t, vars);
  VarId bound = 0;
  for (VarId v : vars) bound = std::max(bound, v + 1);
  return bound;
}

struct Pending {
  Tag tag;
  Clause clause;
  TableIndex table;
  std::vector<ItemId> parents;
  Origin origin;
};

class Engine {
 public:
  Engine(const Program& program, const Policy& policy, const EngineConfig& config)
      : program_(program), policy_(policy), config_(config) {}

  ProofResult run(const Goal& query) {
    if (query.empty()) throw EngineError("query must not be empty");
    if (config_.max_items == 0) throw EngineError("max_items must be positive");
    supply_ = VarSupply(std::max(program_.var_bound(), var_bound(query)));

    Renamer rename(supply_);
    Goal goal = rename(query);
    result_.query = query;
    result_.derivations_recorded = config_.record_derivations;
    new_table(goal);
    agenda_.push_back(Pending{ProgramTag{}, Clause{goal, goal}, 0, {}, QueryOrigin{}});

    while (!agenda_.empty()) {
      if (result_.steps == config_.max_items) {
        result_.status = RunStatus::StepLimit;
        break;
      }
      Pending next;
      if (config_.agenda == AgendaDiscipline::Fifo) {
        next = std::move(agenda_.front());
        agenda_.pop_front();
      } else {
        next = std::move(agenda_.back());
        agenda_.pop_back();
      }
      ++result_.steps;
      process(std::move(next));
    }

    for (ItemId id : result_.tables.front().solutions) {
      result_.gamma.push_back(Answer{id, result_.item(id).clause});
    }
    return std::move(result_);
  }

 private:
  TableIndex new_table(Goal goal) {
    LemmaTable table;
    table.index = static_cast<TableIndex>(result_.tables.size());
    table.key = canonical_key(goal);
    table.goal = std::move(goal);
    table_index_.emplace(table.key, table.index);
    result_.tables.push_back(std::move(table));
    solution_keys_.emplace_back();
    return result_.tables.back().index;
  }

  void push(Clause clause, TableIndex table, std::vector<ItemId> parents, Origin origin) {
    Tag tag = control(clause.body, policy_);
    agenda_.push_back(Pending{std::move(tag), std::move(clause), table, std::move(parents), origin});
  }

  Item& log(Pending&& p) {
    Item item;
    item.id = static_cast<ItemId>(result_.items.size() + 1);
    item.tag = std::move(p.tag);
    item.clause = std::move(p.clause);
    item.table = p.table;
    item.parents = std::move(p.parents);
    item.origin = p.origin;
    result_.tables[item.table].items.push_back(item.id);
    result_.items.push_back(std::move(item));
    return result_.items.back();
  }

  void process(Pending p) {
    const std::size_t index = result_.items.size();
    log(std::move(p));
    // Item references are re-fetched by index: pushing onto items may move them.
    const Tag& tag = result_.items[index].tag;
    if (std::holds_alternative<ProgramTag>(tag)) {
      program_step(index);
    } else if (std::holds_alternative<TableTag>(tag)) {
      table_step(index);
    } else {
      solution_step(index);
    }
  }

  void program_step(std::size_t index) {
    const Clause clause = result_.items[index].clause;
    const ItemId id = result_.items[index].id;
    const TableIndex table = result_.items[index].table;

    std::size_t selected = 0;
    if (auto sel = select_program_literal(clause.body, policy_)) {
      selected = sel->index;
    } else if (clause.body.empty()) {
      return;
    }
    const Term& literal = clause.body[selected];
    result_.items[index].selected = {literal};

    const std::size_t on[] = {selected};
    for (std::size_t k : program_.candidates(literal)) {
      const Clause& candidate = program_.clause(k);
      if (candidate.head.size() != 1) continue;
      auto resolvent = resolve_clause(clause, candidate, on, supply_, config_.occurs_check);
      if (!resolvent) continue;
      push(std::move(*resolvent), table, {id}, ProgramOrigin{id, k});
    }
  }

  void table_step(std::size_t index) {
    Item& item = result_.items[index];
    const auto& tag = std::get<TableTag>(item.tag);
    item.selected = tag.goal;

    ParentItem parent{item.clause.head, tag.goal, tag.rest, item.table, item.id};
    Goal abstracted = abstract_goal(tag.goal, policy_, supply_);
    CanonicalKey key = canonical_key(abstracted);

    auto found = table_index_.find(key);
    if (found != table_index_.end()) {
      const TableIndex callee = found->second;
      item.callee = callee;
      result_.tables[callee].parents.push_back(parent);
      const std::vector<ItemId> solutions = result_.tables[callee].solutions;
      for (ItemId sol : solutions) complete(parent, sol);
      return;
    }

    Renamer rename(supply_);
    Goal goal = rename(abstracted);
    const ItemId caller = item.id;
    const TableIndex callee = new_table(goal);
    result_.items[index].callee = callee;
    result_.tables[callee].parents.push_back(std::move(parent));
    agenda_.push_back(Pending{ProgramTag{}, Clause{goal, goal}, callee, {caller}, TableRootOrigin{caller}});
  }

  void solution_step(std::size_t index) {
    Item& item = result_.items[index];
    const TableIndex table = item.table;
    if (config_.dedup_solutions) {
      auto [it, inserted] = solution_keys_[table].try_emplace(clause_key(item.clause), item.id);
      if (!inserted) {
        item.duplicate_of = it->second;
        return;
      }
    }
    const ItemId id = item.id;
    result_.tables[table].solutions.push_back(id);
    const std::vector<ParentItem> parents = result_.tables[table].parents;
    for (const auto& parent : parents) complete(parent, id);
  }

  void complete(const ParentItem& parent, ItemId solution_id) {
    Clause waiting;
    waiting.head = parent.head;
    waiting.body = parent.sub_goal;
    waiting.body.insert(waiting.body.end(), parent.remaining_body.begin(), parent.remaining_body.end());
    std::vector<std::size_t> on(parent.sub_goal.size());
    for (std::size_t i = 0; i < on.size(); ++i) on[i] = i;

    const Clause solution = result_.item(solution_id).clause;
    auto resolvent = resolve_clause(waiting, solution, on, supply_, config_.occurs_check);
    if (!resolvent) return;
    push(std::move(*resolvent), parent.home_table, {parent.item, solution_id},
         CompletionOrigin{parent.item, solution_id});
  }

  const Program& program_;
  const Policy& policy_;
  EngineConfig config_;
  VarSupply supply_;
  std::deque<Pending> agenda_;
  ProofResult result_;
  std::unordered_map<CanonicalKey, TableIndex> table_index_;
  std::vector<std::unordered_map<CanonicalKey, ItemId>> solution_keys_;
};

class TreeBuilder {
 public:
  TreeBuilder(const ProofResult& result, std::size_t limit) : result_(result), limit_(limit) {
    for (const auto& item : result.items) {
      if (item.duplicate_of) members_[*item.duplicate_of].push_back(item.id);
    }
  }

  std::vector<DerivationTree> of_class(ItemId representative) {
    if (!active_.insert(representative).second) return {};
    std::vector<DerivationTree> out = of_item(representative);
    if (auto it = members_.find(representative); it != members_.end()) {
      for (ItemId m : it->second) {
        if (out.size() >= limit_) break;
        auto more = of_item(m);
        for (auto& t : more) {
          if (out.size() >= limit_) break;
          out.push_back(std::move(t));
        }
      }
    }
    active_.erase(representative);
    return out;
  }

 private:
  std::vector<DerivationTree> of_item(ItemId id) {
    const Item& item = result_.item(id);
    std::vector<DerivationTree> out;
    if (const auto* step = std::get_if<ProgramOrigin>(&item.origin)) {
      for (auto& sub : of_item(step->parent)) {
        if (out.size() >= limit_) break;
        DerivationTree node{id, step->program_clause, std::nullopt, {}};
        node.children.push_back(std::move(sub));
        out.push_back(std::move(node));
      }
    } else if (const auto* step = std::get_if<CompletionOrigin>(&item.origin)) {
      const Item& sol = result_.item(step->solution);
      const ItemId rep = sol.duplicate_of.value_or(sol.id);
      auto solution_trees = of_class(rep);
      if (solution_trees.empty()) return out;
      for (const auto& waiting : of_item(step->parent)) {
        for (const auto& used : solution_trees) {
          if (out.size() >= limit_) return out;
          DerivationTree node{id, std::nullopt, step->solution, {waiting, used}};
          out.push_back(std::move(node));
        }
      }
    } else {
      out.push_back(DerivationTree{id, std::nullopt, std::nullopt, {}});
    }
    return out;
  }

  const ProofResult& result_;
  std::size_t limit_;
  std::unordered_map<ItemId, std::vector<ItemId>> members_;
  std::unordered_set<ItemId> active_;
};

}  // namespace

ProofResult run(const Program& program, const Policy& policy, const Goal& query,
                const EngineConfig& config) {
  return Engine(program, policy, config).run(query);
}

std::vector<DerivationTree> derivation_trees(const ProofResult& result, const Goal& query,
                                             std::size_t limit) {
  if (!result.derivations_recorded) {
    throw EngineError("derivation trees need a run with record_derivations on");
  }
  std::vector<DerivationTree> out;
  TreeBuilder builder(result, limit);
  for (const auto& answer : result.gamma) {
    if (out.size() >= limit) break;
    VarSupply supply(std::max(var_bound(answer.clause.head), var_bound(query)));
    Renamer rename(supply);
    if (!unify_goals(rename(query), answer.clause.head, Bindings{})) continue;
    for (auto& t : builder.of_class(answer.item)) {
      if (out.size() >= limit) break;
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<DerivationTree> derivation_trees(const ProofResult& result, std::size_t limit) {
  return derivation_trees(result, result.query, limit);
}

}  // namespace lemma
