#pragma once

#include <initializer_list>
#include <memory>
#include <set>
#include <string>

namespace thu {

// Terms of the lambda-Pi calculus. Bound variables are de Bruijn indices
// (BVar), free variables are named (Var), so alpha-equivalence is plain
// structural equality and substitution can never capture. Binder names on
// Prod/Abs are printing hints only and do not take part in term identity.
//
// Every term handled through the public API is locally closed except the
// body child of Prod/Abs, whose index 0 refers to its own binder.
enum class TermKind { Sort, Const, Var, BVar, App, Prod, Abs };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  bool is_kind = false;  // Sort only: false = TYPE, true = KIND
  std::string name;      // Const / Var name; Prod / Abs binder hint
  int index = 0;         // BVar only
  Term left;             // App function; Prod / Abs domain
  Term right;            // App argument; Prod / Abs body
};

// Raw constructors.
Term type_sort();
Term kind_sort();
Term cnst(std::string name);
Term var(std::string name);
Term bvar(int index);
Term app(Term f, Term a);
Term app(Term f, std::initializer_list<Term> args);
Term prod(std::string hint, Term domain, Term body);  // body may use bvar(0)
Term abs(std::string hint, Term domain, Term body);

// Binding constructors: close over the named variable.
Term pi(const std::string& x, const Term& domain, const Term& codomain);
Term lam(const std::string& x, const Term& domain, const Term& body);
Term arrow(const Term& domain, const Term& codomain);  // non-dependent product

bool is_type(const Term& t);
bool is_kind(const Term& t);

// True when the product/abstraction body actually uses its binder.
bool body_uses_binder(const Term& binder_term);

// Alpha-equivalence (structural equality modulo binder hints).
bool alpha_eq(const Term& a, const Term& b);

// Capture-avoiding substitution of the free variable x by u.
Term subst(const Term& t, const std::string& x, const Term& u);

// Instantiate the binder of `body` (the body child of a Prod/Abs) with u.
Term open_binder(const Term& body, const Term& u);

// Abstract the free variable x into the binder at index 0.
Term close_binder(const Term& t, const std::string& x);

std::set<std::string> free_vars(const Term& t);
std::set<std::string> const_of(const Term& t);

// True when t contains no BVar with index >= depth 0 (locally closed).
bool locally_closed(const Term& t);

// Fresh variable name, never produced by the parser.
std::string fresh_name();

int term_depth(const Term& t);
int term_size(const Term& t);

}  // namespace thu
