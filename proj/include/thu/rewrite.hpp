#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thu/signature.hpp"
#include "thu/term.hpp"

namespace thu {

constexpr long kDefaultFuel = 100000;

using Substitution = std::map<std::string, Term>;

// First-order syntactic matching of a binder-free pattern against a subject.
// Pattern variables may repeat (the bound subterms must then be alpha-equal).
// Throws UnsupportedPattern if the pattern contains a binder or bound
// variable; never inspects under the subject's binders.
std::optional<Substitution> match(const Term& pattern, const Term& subject);

// Simultaneous substitution of free variables.
Term msubst(const Term& t, const Substitution& sub);

struct StepResult {
  Term term;
  bool by_beta = false;
  std::string rule;  // rule name when not a beta step
};

enum class Strategy { LeftmostOutermost, RightmostInnermost };

// One beta-or-rule step at the first redex in strategy order, if any.
std::optional<StepResult> step(const std::vector<RewriteRule>& rules, const Term& t,
                               Strategy strategy = Strategy::LeftmostOutermost);

struct NormalizeResult {
  Term term;
  long steps = 0;
};

// Reduces to beta-rule normal form, spending at most `fuel` steps; throws
// FuelExhausted if a redex remains once the fuel is gone.
NormalizeResult normalize(const std::vector<RewriteRule>& rules, const Term& t,
                          long fuel = kDefaultFuel,
                          Strategy strategy = Strategy::LeftmostOutermost);

// Conversion test: compares full normal forms up to alpha.
bool convertible(const std::vector<RewriteRule>& rules, const Term& a, const Term& b,
                 long fuel = kDefaultFuel);

struct Overlap {
  std::string outer_rule;
  std::string inner_rule;
  std::string position;  // path from the outer LHS root, "" for root overlap
};

struct OrthogonalityReport {
  std::vector<std::pair<std::string, bool>> left_linear;  // per rule
  std::vector<Overlap> overlaps;
  bool verdict = false;  // all left-linear and no overlaps
  // Beta never overlaps a constant-headed pattern: a beta redex is headed by
  // an abstraction, a rule redex by a constant, and patterns contain no
  // binders for a beta redex to sit at a pattern position.
  std::string beta_note;
};

OrthogonalityReport check_orthogonality(const std::vector<RewriteRule>& rules);

}  // namespace thu
