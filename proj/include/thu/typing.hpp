#pragma once

#include <string>
#include <vector>

#include "thu/rewrite.hpp"
#include "thu/signature.hpp"
#include "thu/term.hpp"

namespace thu {

// Rejects duplicate names and entries whose type is not typed by a sort
// under the preceding entries (IllFormedContext).
void well_formed_ctx(const Theory& theory, const Context& ctx, long fuel = kDefaultFuel);

// Syntax-directed type inference. Function types are normalized to expose
// the product; conversion compares full normal forms. The returned type is
// the representative built by the algorithm, not necessarily normal.
Term infer(const Theory& theory, const Context& ctx, const Term& t, long fuel = kDefaultFuel);

// Checks t against an expected type: infer(t) must convert to `type`, and
// `type` must itself live in a sort (or be KIND when t is TYPE).
// Throws TypeMismatch on conversion failure.
void check(const Theory& theory, const Context& ctx, const Term& t, const Term& type,
           long fuel = kDefaultFuel);

struct PreservationReport {
  std::string rule;
  bool verdict = false;
  Term lhs_type;  // null when inference failed
  Term rhs_type;
  std::vector<std::string> used_equations;
  std::string note;  // failure detail when verdict is false
};

// Executable type-preservation criterion for one rule: the annotated pattern
// variables form the context, the LHS equations are applied as a substitution
// to make the LHS typable, then both sides must infer convertible types.
PreservationReport check_rule_preservation(const Theory& theory, const RewriteRule& rule,
                                           long fuel = kDefaultFuel);

// User-facing terms may not mention definitional-extension constants.
void lint_no_dagger(const Theory& theory, const Term& t);

}  // namespace thu
