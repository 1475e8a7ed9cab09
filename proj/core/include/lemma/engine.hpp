#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <variant>
#include <vector>

#include "lemma/clause.hpp"
#include "lemma/policy.hpp"
#include "lemma/term.hpp"

namespace lemma {

using ItemId = std::uint32_t;      // 1-based, assigned when an item is processed
using TableIndex = std::uint32_t;  // 0 is the query's table

enum class AgendaDiscipline { Fifo, Lifo };
enum class RunStatus { Completed, StepLimit };

struct EngineConfig {
  AgendaDiscipline agenda = AgendaDiscipline::Fifo;
  std::size_t max_items = 100000;
  OccursCheck occurs_check = OccursCheck::On;
  bool dedup_solutions = true;
  bool record_derivations = false;
};

// How an item came to exist. Kept for traces and derivation trees.
struct QueryOrigin {};
// First item of a table created on behalf of table item `caller`.
struct TableRootOrigin {
  ItemId caller;
};
struct ProgramOrigin {
  ItemId parent;
  std::size_t program_clause;
};
struct CompletionOrigin {
  ItemId parent;    // the table-tagged item waiting on the callee
  ItemId solution;  // the solution item it was resolved with
};
using Origin = std::variant<QueryOrigin, TableRootOrigin, ProgramOrigin, CompletionOrigin>;

struct Item {
  ItemId id = 0;
  Tag tag;
  Clause clause;
  TableIndex table = 0;          // the table whose goal heads this clause
  std::vector<ItemId> parents;   // items that caused this one
  Origin origin;
  // Literal(s) acted on: the selected literal for program items, the
  // tabled goal for table items, nothing for solutions.
  Goal selected;
  // For table items: the table the goal was sent to.
  std::optional<TableIndex> callee;
  // Solution that is a variant of an earlier solution of the same table
  // (only with dedup on); `duplicate_of` names the stored one.
  std::optional<ItemId> duplicate_of;
};

// A table item waiting for solutions from its callee.
struct ParentItem {
  Goal head;
  Goal sub_goal;
  Goal remaining_body;
  TableIndex home_table = 0;
  ItemId item = 0;
};

struct LemmaTable {
  TableIndex index = 0;
  Goal goal;
  CanonicalKey key;
  std::vector<ItemId> solutions;  // stored (non-duplicate) solution items
  std::vector<ParentItem> parents;
  std::vector<ItemId> items;      // every item belonging to this table
};

struct Answer {
  ItemId item;
  Clause clause;  // instance of the query ::- residual constraints
  const Goal& residual() const { return clause.body; }
};

struct ProofResult {
  std::vector<Answer> gamma;
  std::vector<LemmaTable> tables;
  std::vector<Item> items;  // in processing order; items[i].id == i + 1
  RunStatus status = RunStatus::Completed;
  std::size_t steps = 0;
  Goal query;
  bool derivations_recorded = false;

  const Item& item(ItemId id) const { return items.at(id - 1); }
  std::vector<Goal> gamma_bodies() const;
};

class EngineError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Resolves c0 on the body literals at `on` with a fresh variant of c1 whose
// head must unify element-wise with those literals. The resolvent is
// head(c0) ::- body(c1') ++ (body(c0) - on), fully dereferenced.
std::optional<Clause> resolve_clause(const Clause& c0, const Clause& c1,
                                     std::span<const std::size_t> on, VarSupply& supply,
                                     OccursCheck occurs = OccursCheck::On);

ProofResult run(const Program& program, const Policy& policy, const Goal& query,
                const EngineConfig& config = {});

struct DerivationTree {
  ItemId item = 0;
  std::optional<std::size_t> program_clause;
  std::optional<ItemId> solution;
  std::vector<DerivationTree> children;
  friend bool operator==(const DerivationTree&, const DerivationTree&) = default;
};

// Distinct resolution histories of the answers in gamma whose head unifies
// with `query`. Derivations that use a solution inside its own derivation
// are infinite and are not enumerated. Stops after `limit` trees.
std::vector<DerivationTree> derivation_trees(const ProofResult& result, const Goal& query,
                                             std::size_t limit = 10000);
std::vector<DerivationTree> derivation_trees(const ProofResult& result, std::size_t limit = 10000);

}  // namespace lemma
