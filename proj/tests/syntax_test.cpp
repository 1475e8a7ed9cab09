#include <gtest/gtest.h>

#include "lemma/grammars.hpp"
#include "lemma/syntax.hpp"

using namespace lemma;

TEST(ParseProgram, RuleWithTwoLiteralBody) {
  const auto loaded = parse_program("x(X,L,R) ::- [x(X/Y,L,M), x(Y,M,R)].");
  ASSERT_EQ(loaded.program.size(), 1u);
  const Clause& c = loaded.program.clause(0);
  ASSERT_EQ(c.head.size(), 1u);
  EXPECT_EQ(c.body.size(), 2u);
  EXPECT_EQ(format_clause(c), "x(A,B,C) ::- [x(A/D,B,E), x(D,E,C)]");
}

TEST(ParseProgram, QuotedAtomFact) {
  const auto loaded = parse_program("lex('Frits', np) ::- [].");
  ASSERT_EQ(loaded.program.size(), 1u);
  const Clause& c = loaded.program.clause(0);
  EXPECT_TRUE(c.is_fact());
  EXPECT_EQ(c.head.front().arg(0), Term::atom("Frits"));
  EXPECT_EQ(format_term(c.head.front()), "lex('Frits',np)");
}

TEST(ParseProgram, BareFactSugar) {
  const auto loaded = parse_program("edge(a, b).\nedge(b, c).  % trailing comment\n");
  ASSERT_EQ(loaded.program.size(), 2u);
  EXPECT_TRUE(loaded.program.clause(1).is_fact());
}

TEST(ParseProgram, SourceOrderPerPredicate) {
  const auto loaded = parse_program("p(1). q(a). p(2). p(3).");
  const auto idx = loaded.program.candidates(parse_term("p(X)"));
  ASSERT_EQ(idx.size(), 3u);
  EXPECT_LT(idx[0], idx[1]);
  EXPECT_LT(idx[1], idx[2]);
  EXPECT_EQ(loaded.program.clause(idx[2]).head.front(), parse_term("p(3)"));
}

TEST(ParseProgram, MultiAtomHead) {
  const auto loaded = parse_program("[p(X), q(X)] ::- [r(X)].");
  ASSERT_EQ(loaded.program.size(), 1u);
  EXPECT_EQ(loaded.program.clause(0).head.size(), 2u);
}

TEST(ParseProgram, Directives) {
  const auto loaded = parse_program(
      ":- memo(x(_,_,_)).\n"
      ":- delay(division(_, X/Y), [X, Y]).\n"
      ":- abstract([x(_,Left,_)], [x(_,Left,_)]).\n");
  EXPECT_EQ(loaded.program.size(), 0u);
  ASSERT_EQ(loaded.policy.memo_patterns.size(), 1u);
  ASSERT_EQ(loaded.policy.delay_guards.size(), 1u);
  EXPECT_EQ(loaded.policy.delay_guards[0].must_be_unbound.size(), 2u);
  ASSERT_EQ(loaded.policy.abstraction_templates.size(), 1u);
}

TEST(ParseProgram, Errors) {
  EXPECT_THROW(parse_program(":- frobnicate(x)."), ParseError);
  EXPECT_THROW(parse_program(":- delay(p(X), [Y])."), ParseError);
  // Abstraction must only drop bindings.
  EXPECT_THROW(parse_program(":- abstract([x(A,B)], [x(a,B)])."), ParseError);
  EXPECT_THROW(parse_program(":- abstract([x(A,B)], [x(A,A)])."), ParseError);
  EXPECT_THROW(parse_program("p(a"), ParseError);
  EXPECT_THROW(parse_program("p(a) ::- q(b)."), ParseError);
  EXPECT_THROW(parse_program("'unterminated"), ParseError);
}

TEST(ParseProgram, ErrorPosition) {
  try {
    parse_program("p(a).\nq(b) ::- [r(].\n");
    FAIL() << "expected a syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 1);
  }
}

TEST(Operators, Precedence) {
  EXPECT_EQ(parse_term("s\\np\\np"), parse_term("(s\\np)\\np"));
  EXPECT_EQ(parse_term("x/#y"), parse_term("x/(#y)"));
  EXPECT_EQ(parse_term("a\\b\\c/d"), parse_term("((a\\b)\\c)/d"));
  EXPECT_EQ(parse_term("#a/b"), parse_term("(#a)/b"));
  EXPECT_EQ(parse_term("##a"), parse_term("#(#a)"));
  const Term t = parse_term("s\\np/(s\\np)");
  EXPECT_TRUE(t.has_functor(sym::slash(), 2));
  EXPECT_TRUE(t.arg(0).has_functor(sym::backslash(), 2));
}

TEST(Operators, OperatorAtomsAsArguments) {
  const Term t = parse_term("f(/, \\, #)");
  ASSERT_EQ(t.arity(), 3u);
  EXPECT_EQ(t.arg(0), Term::atom("/"));
  EXPECT_EQ(t.arg(2), Term::atom("#"));
}

TEST(Format, Examples) {
  EXPECT_EQ(format_term(parse_term("(s\\np)/(s\\np)")), "s\\np/(s\\np)");
  EXPECT_EQ(format_term(Term::compound("#", {Term::atom("x")})), "#x");
  EXPECT_EQ(format_term(Term::list({Term::atom("a")})), "[a]");
  EXPECT_EQ(format_term(parse_term("a/(b/c)")), "a/(b/c)");
  EXPECT_EQ(format_term(parse_term("a\\(b/#c)")), "a\\(b/#c)");
  EXPECT_EQ(format_term(parse_term("#(a/b)")), "#(a/b)");
  EXPECT_EQ(format_term(parse_term("[a,b|T]")), "[a,b|A]");
  EXPECT_EQ(format_term(parse_term("'hello world'")), "'hello world'");
  EXPECT_EQ(format_term(parse_term("'it''s'")), "'it\\'s'");
}

TEST(Format, AbbreviationsAreDisplayOnly) {
  TermWriter w;
  w.set_abbreviations({{"add_adjuncts", "add"}, {"lijkt_te", "lt"}});
  EXPECT_EQ(w.term(parse_term("add_adjuncts(s, [lijkt_te])")), "add(s,[lt])");
}

TEST(RoundTrip, BundledPrograms) {
  for (const auto& asset : bundled_assets()) {
    const auto loaded = load_bundled(asset.name);
    for (const auto& c : loaded.program.clauses()) {
      const std::string text = format_clause(c);
      const Clause again = parse_clause(text);
      EXPECT_EQ(clause_key(again), clause_key(c)) << asset.name << ": " << text;
      EXPECT_EQ(format_clause(again), text);
    }
  }
}

TEST(RoundTrip, GoalForms) {
  EXPECT_EQ(parse_goal("[p(X), q(X)]"), parse_goal("p(X), q(X)."));
  EXPECT_EQ(parse_goal("p").size(), 1u);
}

TEST(Variables, AnonymousAreDistinct) {
  const Term t = parse_term("f(_, _)");
  EXPECT_NE(t.arg(0), t.arg(1));
  const Term u = parse_term("f(X, X)");
  EXPECT_EQ(u.arg(0), u.arg(1));
}
