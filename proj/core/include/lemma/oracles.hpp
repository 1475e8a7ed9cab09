#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "lemma/clause.hpp"
#include "lemma/policy.hpp"
#include "lemma/term.hpp"

namespace lemma {

// Reference evaluators for differential testing. Neither shares code with the
// engine beyond the term substrate.

struct OracleAnswer {
  Bindings bindings;  // query variables only, fully resolved
  Goal residual;      // delayed literals left at the success leaf
  Goal instance;      // the query under `bindings`
};

struct OracleResult {
  std::vector<OracleAnswer> answers;
  // False when some branch hit the depth bound or the step budget ran out;
  // true means the answer list is complete.
  bool exhausted = true;
  std::size_t steps = 0;
};

struct SldOptions {
  // Total resolution steps across all branches before the search gives up.
  std::size_t max_steps = 1'000'000;
  OccursCheck occurs_check = OccursCheck::On;
};

// Depth-first, leftmost-non-delayed, program-clause-order SLD resolution with
// coroutined (delayed) literals. `depth` bounds resolution steps per branch.
OracleResult sld_solve(const Program& program, const Policy& policy, const Goal& query,
                       std::size_t depth, const SldOptions& options = {});

class NotDatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using GroundAtoms = std::set<Term, TermLess>;

// Least fixpoint of the immediate-consequence operator, computed naively.
// Throws NotDatalogError for compound arguments, non-ground facts or rules
// that are not range-restricted.
GroundAtoms datalog_fixpoint(const Program& program);

}  // namespace lemma
