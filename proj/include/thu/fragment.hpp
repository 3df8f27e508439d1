#pragma once

#include <set>
#include <string>
#include <vector>

#include "thu/rewrite.hpp"
#include "thu/signature.hpp"
#include "thu/term.hpp"

namespace thu {

struct FragmentReport {
  std::vector<std::string> seed;        // sorted constant names
  std::vector<std::string> constants;   // closure, in base declaration order
  std::vector<std::string> rules;       // closure, in base rule order
  int iterations = 0;                   // fixpoint sweeps performed
  std::vector<std::string> catalog_matches;     // entries containing the closure
  std::vector<std::string> context_extensions;  // judgement constants outside the base
  std::vector<std::string> dagger_constants;    // closure constants flagged as extension material
  std::string smallest;                 // first catalog match, when any
  Term rechecked_type;                  // type re-inferred inside the smallest match
};

// Least set of constants containing the seed that is closed under declared
// types and under right-hand sides of rules whose left-hand side fits, with
// the rules so triggered. Seed constants must be declared (UnknownConstant).
FragmentReport fragment_closure(const Theory& base, const std::set<std::string>& seed);

struct FragmentCheck {
  bool ok = false;
  std::vector<std::string> violations;
};

// The literal sub-system conditions of `candidate` against `base`:
// declarations and rules are included with identical content, declared types
// stay inside the candidate, and every base rule whose LHS constants all lie
// in the candidate is present with its RHS constants covered.
FragmentCheck is_fragment(const Theory& base, const Theory& candidate);

// Re-runs inference with only the fragment's signature and rules. The
// judgement must already hold in `ambient`; its constants must lie in the
// fragment (OutsideFragment). The re-inferred type is verified against
// `expected` using the ambient rules (ReCheckFailed otherwise).
Term recheck_in_fragment(const Theory& ambient, const Theory& fragment, const Context& ctx,
                         const Term& t, const Term& expected, long fuel = kDefaultFuel);

// Checks the judgement in the ambient theory, runs the closure of its
// constants over `base`, matches it against the catalog (smallest constant
// set first, names breaking ties), and re-checks the judgement inside the
// smallest match extended with whatever ambient declarations it needs.
FragmentReport classify(const Theory& ambient, const Theory& base,
                        const std::vector<Theory>& catalog, const Context& ctx, const Term& t,
                        const Term& type, long fuel = kDefaultFuel);

}  // namespace thu
