#pragma once

#include <string>
#include <vector>

#include "thu/encode.hpp"

namespace thu {

// Text input for encode-pl. Statements, each ';'-terminated:
//   fun NAME ARITY;      pred NAME ARITY;
//   hyp FORMULA;         goal FORMULA;        proof TERM;   (term in .thu syntax)
// Formulas are prefix with fixed arities: top, bot, (not F), (and F G),
// (or F G), (imp F G), (impc F G), (andc F G), (orc F G), (forall x F),
// (exists x F), (forallc x F), (existsc x F), or a predicate applied to
// first-order terms. Parentheses may be dropped at statement level.
struct PLInput {
  PLLanguage lang;
  std::vector<PLFormula> hyps;
  PLFormula goal;
  bool has_goal = false;
  std::string proof;  // empty when absent
};

PLInput parse_pl_input(const std::string& source);

// Text input for encode-pts:
//   sort NAME;   axiom S1 : S2;   rule S1 S2 S3;
PtsSpec parse_pts_spec(const std::string& source);

}  // namespace thu
