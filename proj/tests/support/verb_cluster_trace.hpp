#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "lemma/engine.hpp"
#include "lemma/syntax.hpp"

namespace testsupport {

// Reference trace for the verb-cluster query, transcribed with full predicate and word
// names. Tables: 0 = x(_,[lijkt_te,ontwijken],_), 1 = x(_,[ontwijken],_),
// 2 = x(_,[],_).
struct TraceEntry {
  int table;
  char tag;
  const char* clause;
};

inline const char* const kTraceQuery = "x(C,[lijkt_te,ontwijken],R)";

inline const std::vector<std::string>& trace_table_goals() {
  static const std::vector<std::string> goals{
      "x(A,[lijkt_te,ontwijken],B)", "x(A,[ontwijken],B)", "x(A,[],B)"};
  return goals;
}

inline const std::vector<TraceEntry>& reference_trace() {
  static const std::vector<TraceEntry> items{
      {0, 'P', "x(A,[lijkt_te,ontwijken],B) ::- [x(A,[lijkt_te,ontwijken],B)]"},
      {0, 'T', "x(A,[lijkt_te,ontwijken],B) ::- [x(A/C,[lijkt_te,ontwijken],D), x(C,D,B)]"},
      {0, 'T', "x(A,[lijkt_te,ontwijken],B) ::- [x(C,[lijkt_te,ontwijken],D), x(A\\C,D,B)]"},
      {0, 'P', "x(A,[lijkt_te,ontwijken],[ontwijken]) ::- [lex(lijkt_te,A)]"},
      {0, 'S',
       "x(A/#B,[lijkt_te,ontwijken],[ontwijken]) ::- [add_adjuncts(s\\np/(s\\np),C), division(C,A/B)]"},
      {0, 'T',
       "x(A,[lijkt_te,ontwijken],B) ::- [add_adjuncts(s\\np/(s\\np),C), division(C,A/D), x(#D,[ontwijken],B)]"},
      {1, 'P', "x(A,[ontwijken],B) ::- [x(A,[ontwijken],B)]"},
      {1, 'T', "x(A,[ontwijken],B) ::- [x(A/C,[ontwijken],D), x(C,D,B)]"},
      {1, 'T', "x(A,[ontwijken],B) ::- [x(C,[ontwijken],D), x(A\\C,D,B)]"},
      {1, 'P', "x(A,[ontwijken],[]) ::- [lex(ontwijken,A)]"},
      {1, 'S', "x(#A,[ontwijken],[]) ::- [add_adjuncts(s\\np\\np,A)]"},
      {0, 'S',
       "x(A,[lijkt_te,ontwijken],[]) ::- [add_adjuncts(s\\np\\np,B), add_adjuncts(s\\np/(s\\np),C), "
       "division(C,A/B)]"},
      {0, 'T',
       "x(A,[lijkt_te,ontwijken],B) ::- [add_adjuncts(s\\np\\np,C), add_adjuncts(s\\np/(s\\np),D), "
       "division(D,A/E/C), x(E,[],B)]"},
      {2, 'P', "x(A,[],B) ::- [x(A,[],B)]"},
      {2, 'T', "x(A,[],B) ::- [x(A/C,[],D), x(C,D,B)]"},
      {2, 'T', "x(A,[],B) ::- [x(C,[],D), x(A\\C,D,B)]"},
      {0, 'T',
       "x(A,[lijkt_te,ontwijken],B) ::- [add_adjuncts(s\\np\\np,C), add_adjuncts(s\\np/(s\\np),D), "
       "division(D,E/C), x(A\\E,[],B)]"},
      {1, 'T', "x(A,[ontwijken],B) ::- [add_adjuncts(s\\np\\np,C), x(A\\#C,[],B)]"},
      {0, 'T',
       "x(A,[lijkt_te,ontwijken],B) ::- [add_adjuncts(s\\np/(s\\np),C), division(C,D/E), "
       "x(A\\(D/#E),[ontwijken],B)]"},
  };
  return items;
}

using Triple = std::tuple<std::string, char, std::string>;

inline std::vector<Triple> expected_triples() {
  std::vector<Triple> out;
  for (const auto& e : reference_trace()) {
    const auto goal = lemma::parse_goal(trace_table_goals().at(static_cast<std::size_t>(e.table)));
    out.emplace_back(lemma::canonical_key(goal).text(), e.tag,
                     lemma::clause_key(lemma::parse_clause(e.clause)).text());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Triple> observed_triples(const lemma::ProofResult& r) {
  std::vector<Triple> out;
  for (const auto& item : r.items) {
    out.emplace_back(r.tables.at(item.table).key.text(), lemma::tag_letter(item.tag),
                     lemma::clause_key(item.clause).text());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// True when `body` is a permutation of `expected` up to one variable renaming.
inline bool body_variant_multiset(const lemma::Goal& body, lemma::Goal expected) {
  if (body.size() != expected.size()) return false;
  std::sort(expected.begin(), expected.end(), lemma::TermLess{});
  do {
    if (lemma::is_variant(body, expected)) return true;
  } while (std::next_permutation(expected.begin(), expected.end(), lemma::TermLess{}));
  return false;
}

}  // namespace testsupport
