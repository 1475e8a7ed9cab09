#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lemma/grammars.hpp"

namespace lemma::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LoadedProgram load_program(const std::string& where) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(where, ec)) {
    std::ifstream in(where, std::ios::binary);
    if (!in) throw UsageError("cannot read " + where);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_program(buffer.str());
  }
  if (find_bundled(where) != nullptr) return load_bundled(where);
  throw UsageError("no such program file or bundled program: " + where);
}

const char* status_name(RunStatus s) {
  return s == RunStatus::Completed ? "completed" : "step-limit";
}

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string render_answer(const Goal& head, const Goal& residual) {
  TermWriter w;
  return w.clause(Clause{head, residual});
}

Verdict decide(const std::vector<std::string>& engine, const std::vector<std::string>& oracle,
               bool oracle_exhausted, bool engine_completed) {
  if (engine == oracle) return Verdict::Equal;
  const bool subset = std::includes(engine.begin(), engine.end(), oracle.begin(), oracle.end());
  if (!oracle_exhausted && engine_completed && subset) return Verdict::EngineTerminatesOracleBounded;
  return Verdict::Mismatch;
}

void collect_constants(const Term& t, std::set<Term, TermLess>& out) {
  if (t.is_var()) return;
  if (t.arity() == 0) {
    out.insert(t);
    return;
  }
  for (const auto& a : t.args()) collect_constants(a, out);
}

// Ground instances of `atom` over `constants`.
void ground_instances(const Term& atom, const std::vector<Term>& constants,
                      std::vector<std::string>& out) {
  std::vector<VarId> vars;
  collect_vars(atom, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.empty()) {
    out.push_back(format_term(atom));
    return;
  }
  if (constants.empty()) return;
  std::vector<std::size_t> choice(vars.size(), 0);
  for (;;) {
    Bindings b;
    for (std::size_t i = 0; i < vars.size(); ++i) b.bind(vars[i], constants[choice[i]]);
    out.push_back(format_term(resolve_term(atom, b)));
    std::size_t i = 0;
    while (i < vars.size() && ++choice[i] == constants.size()) choice[i++] = 0;
    if (i == vars.size()) return;
  }
}

json tree_json(const DerivationTree& t) {
  json node{{"item", t.item}};
  if (t.program_clause) node["program_clause"] = *t.program_clause;
  if (t.solution) node["solution"] = *t.solution;
  json children = json::array();
  for (const auto& c : t.children) children.push_back(tree_json(c));
  node["children"] = std::move(children);
  return node;
}

void print_tree(const DerivationTree& t, const ProofResult& result, int depth, std::ostream& out) {
  const Item& item = result.item(t.item);
  out << std::string(2 * static_cast<std::size_t>(depth), ' ') << "item " << t.item << ' '
      << tag_letter(item.tag);
  if (t.program_clause) out << " by program clause " << *t.program_clause + 1;
  if (t.solution) out << " with solution " << *t.solution;
  out << '\n';
  for (const auto& c : t.children) print_tree(c, result, depth + 1, out);
}

struct RunOptions {
  std::string program;
  std::string query;
  std::string agenda = "fifo";
  std::size_t max_steps = 100000;
  std::string occurs = "on";
  bool no_dedup = false;
  bool json = false;
  bool abbrev = false;
};

void add_run_options(CLI::App& cmd, RunOptions& o) {
  cmd.add_option("program", o.program, "Program file, or the name of a bundled program")->required();
  cmd.add_option("query", o.query, "Query goal, e.g. \"x(C,[lijkt_te,ontwijken],R)\"")->required();
  cmd.add_option("--agenda", o.agenda, "Agenda discipline")
      ->check(CLI::IsMember({"fifo", "lifo"}))
      ->capture_default_str();
  cmd.add_option("--max-steps", o.max_steps, "Item-processing limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--occurs-check", o.occurs, "Occurs check in unification")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  cmd.add_flag("--no-dedup", o.no_dedup, "Re-propagate solutions that are variants of stored ones");
  cmd.add_flag("--json", o.json, "Emit a JSON dump of the proof result");
  cmd.add_flag("--abbrev", o.abbrev, "Abbreviate add_adjuncts/division/lijkt_te/ontwijken in output");
}

EngineConfig make_config(const RunOptions& o, bool derivations) {
  EngineConfig cfg;
  cfg.agenda = o.agenda == "lifo" ? AgendaDiscipline::Lifo : AgendaDiscipline::Fifo;
  cfg.max_items = o.max_steps;
  cfg.occurs_check = o.occurs == "off" ? OccursCheck::Off : OccursCheck::On;
  cfg.dedup_solutions = !o.no_dedup;
  cfg.record_derivations = derivations;
  return cfg;
}

TermWriter make_writer(bool abbrev) {
  TermWriter w;
  if (abbrev) w.set_abbreviations(trace_abbreviations());
  return w;
}

json result_json(const ProofResult& result, bool abbrev) {
  json items = json::array();
  for (const auto& item : result.items) {
    TermWriter w = make_writer(abbrev);
    json parents = item.parents;
    json entry{{"id", item.id},
               {"table", item.table},
               {"tag", std::string(1, tag_letter(item.tag))},
               {"parents", parents},
               {"clause", w.clause(item.clause)},
               {"selected", json::array()},
               {"callee", nullptr},
               {"duplicate_of", nullptr}};
    for (const auto& lit : item.selected) entry["selected"].push_back(w.term(lit));
    if (item.callee) entry["callee"] = *item.callee;
    if (item.duplicate_of) entry["duplicate_of"] = *item.duplicate_of;
    items.push_back(std::move(entry));
  }
  json tables = json::array();
  for (const auto& t : result.tables) {
    TermWriter w = make_writer(abbrev);
    json parents = json::array();
    for (const auto& p : t.parents) parents.push_back(p.item);
    tables.push_back(json{{"index", t.index},
                          {"goal", w.goal(t.goal)},
                          {"solutions", t.solutions},
                          {"parents", parents},
                          {"items", t.items}});
  }
  json gamma = json::array();
  for (const auto& a : result.gamma) {
    TermWriter w = make_writer(abbrev);
    json residual = json::array();
    std::string head = w.literals(a.clause.head);
    for (const auto& lit : a.residual()) residual.push_back(w.term(lit));
    gamma.push_back(json{{"item", a.item}, {"head", head}, {"residual", residual}});
  }
  TermWriter qw = make_writer(abbrev);
  return json{{"query", qw.goal(result.query)},
              {"status", status_name(result.status)},
              {"steps", result.steps},
              {"gamma", gamma},
              {"tables", tables},
              {"items", items}};
}

int cmd_prove(const RunOptions& o, bool trace, bool derivations, std::ostream& out) {
  const LoadedProgram loaded = load_program(o.program);
  const Goal query = parse_goal(o.query);
  const ProofResult result = lemma::run(loaded.program, loaded.policy, query, make_config(o, derivations));

  std::vector<DerivationTree> trees;
  if (derivations) trees = derivation_trees(result);

  if (o.json) {
    json doc = result_json(result, o.abbrev);
    if (derivations) {
      json list = json::array();
      for (const auto& t : trees) list.push_back(tree_json(t));
      doc["derivation_count"] = trees.size();
      doc["derivations"] = std::move(list);
    }
    out << doc.dump(2) << '\n';
  } else {
    if (trace) {
      for (const auto& item : result.items) {
        TermWriter w = make_writer(o.abbrev);
        out << trace_line(item, w) << '\n';
      }
    }
    out << "% status " << status_name(result.status) << ", " << result.steps << " items, "
        << result.tables.size() << " tables, " << result.gamma.size() << " answers\n";
    for (const auto& a : result.gamma) {
      TermWriter w = make_writer(o.abbrev);
      out << w.clause(a.clause) << ".\n";
    }
    if (derivations) {
      out << trees.size() << (trees.size() == 1 ? " derivation" : " derivations") << '\n';
      for (std::size_t i = 0; i < trees.size(); ++i) {
        out << "derivation " << i + 1 << ":\n";
        print_tree(trees[i], result, 1, out);
      }
    }
  }

  if (result.status == RunStatus::StepLimit) return exit_code::kStepLimit;
  return result.gamma.empty() ? exit_code::kNoSolutions : exit_code::kSolutions;
}

int cmd_compare(const RunOptions& o, const std::string& oracle, std::size_t depth,
                std::size_t oracle_steps, std::ostream& out) {
  const LoadedProgram loaded = load_program(o.program);
  const Goal query = parse_goal(o.query);
  const ProofResult result = lemma::run(loaded.program, loaded.policy, query, make_config(o, false));

  ComparisonReport report;
  if (oracle == "fixpoint") {
    if (!loaded.policy.delay_guards.empty()) {
      throw NotDatalogError("the fixpoint oracle does not handle delayed literals");
    }
    report = compare_fixpoint(result, loaded.program, query);
  } else {
    SldOptions opts;
    opts.max_steps = oracle_steps;
    opts.occurs_check = o.occurs == "off" ? OccursCheck::Off : OccursCheck::On;
    report = compare_sld(result, sld_solve(loaded.program, loaded.policy, query, depth, opts));
  }

  if (o.json) {
    out << json{{"engine_status", status_name(result.status)},
                {"engine_answers", report.engine_answers},
                {"oracle", oracle},
                {"oracle_exhausted", report.oracle_exhausted},
                {"oracle_answers", report.oracle_answers},
                {"verdict", verdict_name(report.verdict)}}
               .dump(2)
        << '\n';
  } else {
    out << "engine: " << status_name(result.status) << ", " << report.engine_answers.size()
        << " answers\n";
    for (const auto& a : report.engine_answers) out << "  " << a << '\n';
    out << "oracle " << oracle;
    if (oracle == "sld") out << " (depth " << depth << ")";
    out << ": " << (report.oracle_exhausted ? "exhausted" : "bounded") << ", "
        << report.oracle_answers.size() << " answers\n";
    for (const auto& a : report.oracle_answers) out << "  " << a << '\n';
    if (report.verdict == Verdict::Equal && !report.oracle_exhausted) {
      out << "note: the oracle hit its bound on some branch\n";
    }
    out << "verdict: " << verdict_name(report.verdict) << '\n';
  }
  return report.verdict == Verdict::Mismatch ? exit_code::kMismatch : 0;
}

}  // namespace

std::map<std::string, std::string, std::less<>> trace_abbreviations() {
  return {{"add_adjuncts", "add"}, {"division", "div"}, {"lijkt_te", "lt"}, {"ontwijken", "o"}};
}

std::string trace_line(const Item& item, TermWriter& writer) {
  std::ostringstream line;
  line << item.table << '.' << item.id << '[';
  for (std::size_t i = 0; i < item.parents.size(); ++i) {
    if (i != 0) line << ',';
    line << item.parents[i];
  }
  line << "] " << tag_letter(item.tag) << ' ' << writer.clause(item.clause) << '.';
  if (!item.selected.empty()) {
    line << "  % selected: " << writer.literals(item.selected);
    if (item.callee) line << " -> table " << *item.callee;
  }
  if (item.duplicate_of) line << "  % variant of " << *item.duplicate_of;
  return line.str();
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "EQUAL";
    case Verdict::EngineTerminatesOracleBounded: return "ENGINE-TERMINATES-ORACLE-BOUNDED";
    case Verdict::Mismatch: return "MISMATCH";
  }
  return "MISMATCH";
}

ComparisonReport compare_sld(const ProofResult& engine, const OracleResult& oracle) {
  ComparisonReport report;
  for (const auto& a : engine.gamma) report.engine_answers.push_back(render_answer(a.clause.head, a.residual()));
  for (const auto& a : oracle.answers) report.oracle_answers.push_back(render_answer(a.instance, a.residual));
  report.engine_answers = sorted_unique(std::move(report.engine_answers));
  report.oracle_answers = sorted_unique(std::move(report.oracle_answers));
  report.oracle_exhausted = oracle.exhausted;
  report.engine_completed = engine.status == RunStatus::Completed;
  report.verdict = decide(report.engine_answers, report.oracle_answers, report.oracle_exhausted,
                          report.engine_completed);
  return report;
}

ComparisonReport compare_fixpoint(const ProofResult& engine, const Program& program,
                                  const Goal& query) {
  if (query.size() != 1) throw NotDatalogError("the fixpoint oracle needs a single-literal query");
  const GroundAtoms atoms = datalog_fixpoint(program);

  std::set<Term, TermLess> constant_set;
  for (const auto& c : program.clauses()) {
    for (const auto& t : c.head) collect_constants(t, constant_set);
    for (const auto& t : c.body) collect_constants(t, constant_set);
  }
  collect_constants(query.front(), constant_set);
  const std::vector<Term> constants(constant_set.begin(), constant_set.end());

  ComparisonReport report;
  for (const auto& a : engine.gamma) {
    if (!a.residual().empty() || a.clause.head.size() != 1) {
      report.engine_answers.push_back(render_answer(a.clause.head, a.residual()));
      continue;
    }
    ground_instances(a.clause.head.front(), constants, report.engine_answers);
  }
  for (const auto& atom : atoms) {
    if (unify(query.front(), atom, Bindings{})) report.oracle_answers.push_back(format_term(atom));
  }
  report.engine_answers = sorted_unique(std::move(report.engine_answers));
  report.oracle_answers = sorted_unique(std::move(report.oracle_answers));
  report.engine_completed = engine.status == RunStatus::Completed;
  report.verdict = decide(report.engine_answers, report.oracle_answers, true, report.engine_completed);
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tabled resolution with coroutined constraints (lemma tables)", "lemma"};
  app.require_subcommand(1);

  RunOptions prove_opts;
  bool trace = false;
  bool derivations = false;
  auto* prove = app.add_subcommand("prove", "Run a query and print its answers");
  add_run_options(*prove, prove_opts);
  prove->add_flag("--trace", trace, "Print one line per processed item");
  prove->add_flag("--derivations", derivations, "Count and print derivation trees");

  RunOptions compare_opts;
  std::string oracle;
  std::size_t depth = 50;
  std::size_t oracle_steps = SldOptions{}.max_steps;
  auto* compare = app.add_subcommand("compare", "Compare engine answers with a reference evaluator");
  add_run_options(*compare, compare_opts);
  compare->add_option("--oracle", oracle, "Reference evaluator")
      ->required()
      ->check(CLI::IsMember({"sld", "fixpoint"}));
  compare->add_option("--depth", depth, "SLD resolution-step bound per branch")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  compare->add_option("--oracle-steps", oracle_steps, "SLD total step budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* list = app.add_subcommand("list", "List bundled programs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code::kUsage;
  }

  try {
    if (prove->parsed()) return cmd_prove(prove_opts, trace, derivations, out);
    if (compare->parsed()) return cmd_compare(compare_opts, oracle, depth, oracle_steps, out);
    if (list->parsed()) {
      for (const auto& a : bundled_assets()) out << a.name << "  " << a.description << '\n';
      return 0;
    }
  } catch (const ParseError& e) {
    err << "syntax error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const NotDatalogError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const EngineError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}

}  // namespace lemma::cli
