#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "thu/signature.hpp"
#include "thu/term.hpp"

namespace thu {

// First-order terms over a predicate-logic language. A variable is a head
// with no arguments and is_var set.
struct PLTerm {
  std::string head;
  std::vector<PLTerm> args;
  bool is_var = false;
};

PLTerm pl_var(std::string name);
PLTerm pl_fun(std::string name, std::vector<PLTerm> args = {});

enum class PLConnective {
  Atom,
  True,
  False,
  Neg,
  And,
  Or,
  Imp,
  Forall,
  Exists,
  ImpC,
  AndC,
  OrC,
  ForallC,
  ExistsC,
};

struct PLFormula {
  PLConnective kind = PLConnective::Atom;
  std::string name;  // predicate for Atom, bound variable for quantifiers
  std::vector<PLTerm> args;
  std::vector<PLFormula> children;
};

PLFormula pl_atom(std::string pred, std::vector<PLTerm> args = {});
PLFormula pl_true();
PLFormula pl_false();
PLFormula pl_neg(PLFormula f);
PLFormula pl_and(PLFormula a, PLFormula b);
PLFormula pl_or(PLFormula a, PLFormula b);
PLFormula pl_imp(PLFormula a, PLFormula b);
PLFormula pl_forall(std::string var, PLFormula f);
PLFormula pl_exists(std::string var, PLFormula f);
PLFormula pl_impc(PLFormula a, PLFormula b);
PLFormula pl_andc(PLFormula a, PLFormula b);
PLFormula pl_orc(PLFormula a, PLFormula b);
PLFormula pl_forallc(std::string var, PLFormula f);
PLFormula pl_existsc(std::string var, PLFormula f);

struct PLLanguage {
  std::vector<std::pair<std::string, int>> functions;
  std::vector<std::pair<std::string, int>> predicates;
};

// One context entry per symbol: functions at I -> ... -> I, predicates at
// I -> ... -> Prop. DuplicateSymbol on a repeated name.
Context encode_pl_language(const PLLanguage& lang);

// The formula as a term of type Prop; quantified variables become
// abstractions over the base domain. UnknownSymbol, ArityMismatch.
Term encode_pl_formula(const PLLanguage& lang, const PLFormula& f);

// Language entries, then the formulas' free variables at I, then one proof
// hypothesis per premise; paired with the goal's proof type.
std::pair<Context, Term> encode_pl_sequent(const PLLanguage& lang,
                                           const std::vector<PLFormula>& hyps,
                                           const PLFormula& goal);

struct PtsSpec {
  std::vector<std::string> sorts;
  std::vector<std::pair<std::string, std::string>> axioms;   // (s1, s2): s1 : s2
  std::vector<std::array<std::string, 3>> rules;             // (s1, s2, s3) products
};

// A theory with a universe and decoding constant per sort, a point and
// computation rule per axiom, and a product former and rule per PTS rule.
// NonFunctionalSpec when the axiom or rule relations are not functional.
Theory encode_pts(const PtsSpec& spec);

// True when the declarations and rules of a and b correspond one-to-one
// under the constant renaming, up to alpha.
bool pts_signature_isomorphic(const Theory& a, const Theory& b,
                              const std::map<std::string, std::string>& renaming);

}  // namespace thu
