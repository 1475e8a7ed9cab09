#pragma once

#include <random>
#include <string>
#include <vector>

#include "lemma/term.hpp"

namespace testsupport {

// Random terms over a small signature: constants a,b,c, f/1, g/2, the
// category operators and lists. Variables are drawn from ids 0..vars-1.
class RandomTerms {
 public:
  RandomTerms(std::mt19937& rng, unsigned vars) : rng_(rng), vars_(vars) {}

  lemma::Term term(int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
    int choice = pick(rng_);
    if (choice == 0 && vars_ == 0) choice = 1;
    switch (choice) {
      case 0: return lemma::Term::variable(std::uniform_int_distribution<unsigned>(0, vars_ - 1)(rng_));
      case 1: return lemma::Term::atom(constant());
      case 2: return lemma::Term::compound("f", {term(depth - 1)});
      case 3: return lemma::Term::compound("g", {term(depth - 1), term(depth - 1)});
      case 4: return lemma::Term::compound("/", {term(depth - 1), term(depth - 1)});
      case 5: return lemma::Term::compound("#", {term(depth - 1)});
      default: return lemma::Term::list({term(depth - 1), term(depth - 1)});
    }
  }

 private:
  std::string constant() {
    static const char* names[] = {"a", "b", "c"};
    return names[std::uniform_int_distribution<int>(0, 2)(rng_)];
  }

  std::mt19937& rng_;
  unsigned vars_;
};

}  // namespace testsupport
