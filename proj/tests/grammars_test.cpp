#include <gtest/gtest.h>

#include <map>

#include "lemma/grammars.hpp"
#include "lemma/oracles.hpp"
#include "lemma/syntax.hpp"

using namespace lemma;

TEST(Bundled, AllAssetsParse) {
  ASSERT_EQ(bundled_assets().size(), 4u);
  for (const auto& a : bundled_assets()) {
    EXPECT_NO_THROW(load_bundled(a.name)) << a.name;
    EXPECT_FALSE(a.description.empty());
  }
  EXPECT_THROW(load_bundled("no_such_grammar"), UnknownAssetError);
  EXPECT_EQ(find_bundled("no_such_grammar"), nullptr);
}

TEST(DutchGrammar, ClauseInventory) {
  const auto g = load_bundled("dutch_cg");
  EXPECT_EQ(g.program.size(), 14u);
  std::map<std::string, int> per_predicate;
  for (const auto& c : g.program.clauses()) {
    const Term& h = c.head.front();
    per_predicate[std::string(h.functor().name()) + "/" + std::to_string(h.arity())]++;
  }
  EXPECT_EQ(per_predicate, (std::map<std::string, int>{
                               {"x/3", 3}, {"lex/2", 5}, {"add_adjuncts/2", 4}, {"division/2", 2}}));
  EXPECT_EQ(g.policy.memo_patterns.size(), 1u);
  EXPECT_EQ(g.policy.delay_guards.size(), 2u);
  EXPECT_EQ(g.policy.abstraction_templates.size(), 1u);
}

TEST(DutchGrammar, ProperNamesAreQuoted) {
  const auto g = load_bundled("dutch_cg");
  VarSupply supply(100000);
  for (const char* name : {"'Frits'", "'Marie'"}) {
    const Goal q{Term::compound("lex", {parse_term(name), supply.fresh_var()})};
    const auto r = sld_solve(g.program, g.policy, q, 5);
    ASSERT_EQ(r.answers.size(), 1u) << name;
    EXPECT_EQ(r.answers.front().instance.front().arg(1), Term::atom("np"));
  }
}

TEST(DutchGrammar, RaisingVerbEntry) {
  const auto g = load_bundled("dutch_cg");
  const auto r = sld_solve(g.program, g.policy, parse_goal("lex(lijkt_te, X)"), 5);
  ASSERT_EQ(r.answers.size(), 1u);
  const auto& a = r.answers.front();
  const Clause got{a.instance, a.residual};
  EXPECT_EQ(clause_key(got), clause_key(parse_clause(
      "lex(lijkt_te, A/#B) ::- [add_adjuncts((s\\np)/(s\\np), C), division(C, A/B)]")));
}

TEST(DutchGrammar, AdjunctAdditionResolvesOnceInstantiated) {
  const auto g = load_bundled("dutch_cg");
  const auto r = sld_solve(g.program, g.policy, parse_goal("add_adjuncts(s\\np, X\\np)"), 10);
  EXPECT_FALSE(r.answers.empty());
}
