#pragma once

#include "lemma/clause.hpp"
#include "lemma/engine.hpp"
#include "lemma/grammars.hpp"
#include "lemma/oracles.hpp"
#include "lemma/policy.hpp"
#include "lemma/symbol.hpp"
#include "lemma/syntax.hpp"
#include "lemma/term.hpp"
