#include <benchmark/benchmark.h>

#include "lemma/lemma.hpp"

namespace {

void BM_VerbClusterTrace(benchmark::State& state) {
  const auto loaded = lemma::load_bundled("dutch_cg");
  const auto query = lemma::parse_goal("x(C,[lijkt_te,ontwijken],R)");
  for (auto _ : state) {
    auto result = lemma::run(loaded.program, loaded.policy, query);
    benchmark::DoNotOptimize(result.items.size());
  }
}
BENCHMARK(BM_VerbClusterTrace);

void BM_FritsMarieSentence(benchmark::State& state) {
  const auto loaded = lemma::load_bundled("dutch_cg");
  const auto query = lemma::parse_goal("x(s,['Frits',opzettelijk,'Marie',lijkt_te,ontwijken],[])");
  for (auto _ : state) {
    auto result = lemma::run(loaded.program, loaded.policy, query);
    benchmark::DoNotOptimize(result.gamma.size());
  }
}
BENCHMARK(BM_FritsMarieSentence)->Unit(benchmark::kMillisecond);

// Left-recursive closure over a chain of n edges.
void BM_ChainClosure(benchmark::State& state) {
  const auto n = state.range(0);
  std::string text = ":- memo(path(_,_)).\n:- memo(edge(_,_)).\n";
  text += "path(X,Y) ::- [edge(X,Y)].\npath(X,Y) ::- [path(X,Z), edge(Z,Y)].\n";
  for (int64_t i = 0; i < n; ++i) {
    text += "edge(n" + std::to_string(i) + ", n" + std::to_string(i + 1) + ").\n";
  }
  const auto loaded = lemma::parse_program(text);
  const auto query = lemma::parse_goal("path(n0, Y)");
  for (auto _ : state) {
    auto result = lemma::run(loaded.program, loaded.policy, query);
    benchmark::DoNotOptimize(result.gamma.size());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ChainClosure)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_UnifyCategories(benchmark::State& state) {
  lemma::VarSupply supply;
  const auto a = lemma::parse_term("x(A/(B\\C)/#D, [w1,w2,w3|T], R)", supply);
  const auto b = lemma::parse_term("x((s\\np\\adv)/(np\\E)/#(s\\np), L, [])", supply);
  for (auto _ : state) {
    auto mgu = lemma::unify(a, b, {});
    benchmark::DoNotOptimize(mgu.has_value());
  }
}
BENCHMARK(BM_UnifyCategories);

void BM_CanonicalKey(benchmark::State& state) {
  const auto goal = lemma::parse_goal(
      "[add_adjuncts(s\\np\\np,B), add_adjuncts(s\\np/(s\\np),C), division(C,A/B), x(A,[lijkt_te,ontwijken],[])]");
  for (auto _ : state) {
    auto key = lemma::canonical_key(goal);
    benchmark::DoNotOptimize(key.text().size());
  }
}
BENCHMARK(BM_CanonicalKey);

}  // namespace

BENCHMARK_MAIN();
