#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lemma/engine.hpp"
#include "lemma/oracles.hpp"
#include "lemma/syntax.hpp"

namespace lemma::cli {

namespace exit_code {
inline constexpr int kSolutions = 0;
inline constexpr int kNoSolutions = 1;
inline constexpr int kStepLimit = 2;
inline constexpr int kUsage = 3;
inline constexpr int kMismatch = 4;
}  // namespace exit_code

// Trace rendering for one processed item:
//   <table>.<id>[<parents>] <P|T|S> <clause>.  % selected: <literals>
std::string trace_line(const Item& item, TermWriter& writer);

// Short display names for the Dutch grammar's long predicates and words.
std::map<std::string, std::string, std::less<>> trace_abbreviations();

enum class Verdict { Equal, EngineTerminatesOracleBounded, Mismatch };
const char* verdict_name(Verdict v);

struct ComparisonReport {
  std::vector<std::string> engine_answers;  // canonical renderings, sorted
  std::vector<std::string> oracle_answers;
  bool oracle_exhausted = true;
  bool engine_completed = true;
  Verdict verdict = Verdict::Equal;
};

ComparisonReport compare_sld(const ProofResult& engine, const OracleResult& oracle);
// Throws NotDatalogError when the program or query is outside Datalog.
ComparisonReport compare_fixpoint(const ProofResult& engine, const Program& program,
                                  const Goal& query);

// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lemma::cli
