#pragma once

#include <string>
#include <vector>

#include "thu/rewrite.hpp"
#include "thu/signature.hpp"

namespace thu {

// The built-in theory: a sorted universe of propositions and sets with
// computation rules for the connectives, quantifiers, double-negation
// (classical) connectives, dependent function spaces, natural-number
// primitives, predicate subtyping, a universe of type schemes, and prenex
// polymorphism. Built once, immutable afterwards.
const Theory& theory_u();

struct CatalogEntry {
  std::string name;
  std::vector<std::string> clusters;  // axiom clusters the entry is authored from
  std::string description;
};

// The named sub-theories, in the order the systems build on one another.
const std::vector<CatalogEntry>& catalog();

// The induced sub-theory for a catalog entry: the closure of its clusters'
// constants, carved out of theory_u in declaration order. UnknownSubTheory
// for names outside the catalog.
Theory subtheory(const std::string& name);

// All induced sub-theories, in catalog order. Built once.
const std::vector<Theory>& catalog_theories();

struct EntryVerification {
  std::string name;
  bool fragment_ok = false;
  bool orthogonal = false;
  bool preservation_ok = false;
  std::vector<std::string> completion;  // constants the closure added to the authored clusters
  std::vector<std::string> problems;
};

struct CatalogVerification {
  bool ok = false;
  bool declarations_typed = false;  // every declared type of theory_u infers a sort
  std::vector<EntryVerification> entries;
};

// Re-derives the catalog's health: every entry is a genuine sub-system,
// its rules are orthogonal, and every rule preserves typing.
CatalogVerification verify_catalog(long fuel = kDefaultFuel);

}  // namespace thu
