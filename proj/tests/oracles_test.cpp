#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lemma/grammars.hpp"
#include "lemma/oracles.hpp"
#include "lemma/syntax.hpp"
#include "random_programs.hpp"

using namespace lemma;

namespace {

void constants_of(const Term& t, std::set<Term, TermLess>& out) {
  if (t.is_var()) return;
  if (t.arity() == 0) out.insert(t);
  for (const auto& a : t.args()) constants_of(a, out);
}

// Least model by full grounding: every rule is instantiated with every
// assignment of constants to its variables, and the immediate-consequence
// operator is iterated over the ground instances until nothing changes.
GroundAtoms grounded_least_model(const Program& program) {
  std::set<Term, TermLess> constants;
  for (const auto& c : program.clauses()) {
    for (const auto& t : c.head) constants_of(t, constants);
    for (const auto& t : c.body) constants_of(t, constants);
  }
  const std::vector<Term> domain(constants.begin(), constants.end());

  std::vector<Clause> ground;
  for (const auto& c : program.clauses()) {
    std::vector<VarId> vars;
    for (const auto& t : c.head) collect_vars(t, vars);
    for (const auto& t : c.body) collect_vars(t, vars);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::vector<std::size_t> pick(vars.size(), 0);
    if (!vars.empty() && domain.empty()) continue;
    for (;;) {
      Bindings b;
      for (std::size_t i = 0; i < vars.size(); ++i) b.bind(vars[i], domain[pick[i]]);
      ground.push_back(resolve_clause_terms(c, b));
      std::size_t i = 0;
      while (i < vars.size() && ++pick[i] == domain.size()) pick[i++] = 0;
      if (i == vars.size()) break;
    }
  }

  GroundAtoms model;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& g : ground) {
      const bool fires = std::all_of(g.body.begin(), g.body.end(),
                                     [&](const Term& t) { return model.count(t) != 0; });
      if (fires && model.insert(g.head.front()).second) changed = true;
    }
  }
  return model;
}

std::set<std::string> rendered(const GroundAtoms& atoms) {
  std::set<std::string> out;
  for (const auto& a : atoms) out.insert(format_term(a));
  return out;
}

}  // namespace

TEST(Sld, LeftRecursionIsNotExhausted) {
  const auto g = load_bundled("dutch_cg");
  const auto r = sld_solve(g.program, g.policy, parse_goal("x(C,[lijkt_te,ontwijken],R)"), 50);
  EXPECT_FALSE(r.exhausted);
}

TEST(Sld, LexiconEntryWithResidual) {
  const auto g = load_bundled("dutch_cg");
  VarSupply supply(100000);
  VarNames names;
  const Goal q = parse_goal("[lex(ontwijken,X)]", supply, &names);
  const auto r = sld_solve(g.program, g.policy, q, 10);
  EXPECT_TRUE(r.exhausted);
  ASSERT_EQ(r.answers.size(), 1u);
  const auto& a = r.answers.front();
  const Term* x = a.bindings.lookup(names.front().second);
  ASSERT_NE(x, nullptr);
  ASSERT_TRUE(x->has_functor(sym::hash(), 1));
  ASSERT_TRUE(x->arg(0).is_var());
  ASSERT_EQ(a.residual.size(), 1u);
  const Term expected = Term::compound("add_adjuncts", {parse_term("s\\np\\np"), x->arg(0)});
  EXPECT_EQ(a.residual.front(), expected);
}

TEST(Sld, TrivialFact) {
  const auto p = parse_program("p ::- [].");
  const auto r = sld_solve(p.program, p.policy, parse_goal("p"), 5);
  EXPECT_TRUE(r.exhausted);
  ASSERT_EQ(r.answers.size(), 1u);
  EXPECT_TRUE(r.answers.front().bindings.empty());
  EXPECT_TRUE(r.answers.front().residual.empty());
}

TEST(Sld, ClauseOrderAndBacktracking) {
  const auto p = parse_program("n(1). n(2). n(3). big(X) ::- [n(X), gt(X)]. gt(2). gt(3).");
  VarSupply supply(1000);
  VarNames names;
  const auto r = sld_solve(p.program, p.policy, parse_goal("big(Y)", supply, &names), 10);
  EXPECT_TRUE(r.exhausted);
  ASSERT_EQ(r.answers.size(), 2u);
  EXPECT_EQ(*r.answers[0].bindings.lookup(names[0].second), parse_term("2"));
  EXPECT_EQ(*r.answers[1].bindings.lookup(names[0].second), parse_term("3"));
}

TEST(Sld, StepBudgetMarksIncomplete) {
  const auto p = parse_program("n(z). n(s(X)) ::- [n(X)].");
  SldOptions opts;
  opts.max_steps = 20;
  const auto r = sld_solve(p.program, p.policy, parse_goal("n(X)"), 1000, opts);
  EXPECT_FALSE(r.exhausted);
  EXPECT_LE(r.steps, 20u);
  EXPECT_THROW(sld_solve(p.program, p.policy, parse_goal("n(X)"), 0), std::invalid_argument);
}

TEST(Fixpoint, TransitiveClosure) {
  const auto p = parse_program(
      "edge(a,b). edge(b,c).\n"
      "path(X,Y) ::- [edge(X,Y)].\n"
      "path(X,Y) ::- [path(X,Z), edge(Z,Y)].\n");
  const auto atoms = datalog_fixpoint(p.program);
  std::set<std::string> paths;
  for (const auto& a : rendered(atoms)) {
    if (a.rfind("path", 0) == 0) paths.insert(a);
  }
  EXPECT_EQ(paths, (std::set<std::string>{"path(a,b)", "path(a,c)", "path(b,c)"}));
  EXPECT_EQ(rendered(atoms), rendered(grounded_least_model(p.program)));
}

TEST(Fixpoint, TrivialCases) {
  EXPECT_EQ(rendered(datalog_fixpoint(parse_program("f(a).").program)), (std::set<std::string>{"f(a)"}));
  EXPECT_TRUE(datalog_fixpoint(Program{}).empty());
}

TEST(Fixpoint, RejectsNonDatalog) {
  EXPECT_THROW(datalog_fixpoint(parse_program("p(f(a)).").program), NotDatalogError);
  EXPECT_THROW(datalog_fixpoint(parse_program("p(X).").program), NotDatalogError);
  EXPECT_THROW(datalog_fixpoint(parse_program("p(X) ::- [q(Y)].").program), NotDatalogError);
  EXPECT_THROW(datalog_fixpoint(load_bundled("dutch_cg").program), NotDatalogError);
}

class FixpointProperties : public ::testing::TestWithParam<unsigned> {};

TEST_P(FixpointProperties, AgreesWithGroundedModel) {
  std::mt19937 rng(GetParam());
  for (int i = 0; i < 20; ++i) {
    const auto g = testsupport::random_datalog(rng);
    const auto p = parse_program(g.text);
    EXPECT_EQ(rendered(datalog_fixpoint(p.program)), rendered(grounded_least_model(p.program))) << g.text;
  }
}

TEST_P(FixpointProperties, MonotoneUnderAddedFacts) {
  std::mt19937 rng(GetParam() + 500u);
  for (int i = 0; i < 20; ++i) {
    const auto g = testsupport::random_datalog(rng);
    const auto before = datalog_fixpoint(parse_program(g.text).program);
    const auto after = datalog_fixpoint(parse_program(g.text + "p0(c).\np0(a,d).\n").program);
    EXPECT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end(), TermLess{}))
        << g.text;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, FixpointProperties, ::testing::Values(3u, 17u, 256u));
