#include "thu/encode.hpp"

#include <algorithm>
#include <set>

#include "thu/error.hpp"

namespace thu {

PLTerm pl_var(std::string name) { return {std::move(name), {}, true}; }

PLTerm pl_fun(std::string name, std::vector<PLTerm> args) {
  return {std::move(name), std::move(args), false};
}

PLFormula pl_atom(std::string pred, std::vector<PLTerm> args) {
  PLFormula f;
  f.kind = PLConnective::Atom;
  f.name = std::move(pred);
  f.args = std::move(args);
  return f;
}

namespace {

PLFormula nullary(PLConnective kind) {
  PLFormula f;
  f.kind = kind;
  return f;
}

PLFormula unary(PLConnective kind, PLFormula a) {
  PLFormula f;
  f.kind = kind;
  f.children.push_back(std::move(a));
  return f;
}

PLFormula binary(PLConnective kind, PLFormula a, PLFormula b) {
  PLFormula f;
  f.kind = kind;
  f.children.push_back(std::move(a));
  f.children.push_back(std::move(b));
  return f;
}

PLFormula quantified(PLConnective kind, std::string var, PLFormula a) {
  PLFormula f;
  f.kind = kind;
  f.name = std::move(var);
  f.children.push_back(std::move(a));
  return f;
}

}  // namespace

PLFormula pl_true() { return nullary(PLConnective::True); }
PLFormula pl_false() { return nullary(PLConnective::False); }
PLFormula pl_neg(PLFormula f) { return unary(PLConnective::Neg, std::move(f)); }
PLFormula pl_and(PLFormula a, PLFormula b) {
  return binary(PLConnective::And, std::move(a), std::move(b));
}
PLFormula pl_or(PLFormula a, PLFormula b) {
  return binary(PLConnective::Or, std::move(a), std::move(b));
}
PLFormula pl_imp(PLFormula a, PLFormula b) {
  return binary(PLConnective::Imp, std::move(a), std::move(b));
}
PLFormula pl_forall(std::string var, PLFormula f) {
  return quantified(PLConnective::Forall, std::move(var), std::move(f));
}
PLFormula pl_exists(std::string var, PLFormula f) {
  return quantified(PLConnective::Exists, std::move(var), std::move(f));
}
PLFormula pl_impc(PLFormula a, PLFormula b) {
  return binary(PLConnective::ImpC, std::move(a), std::move(b));
}
PLFormula pl_andc(PLFormula a, PLFormula b) {
  return binary(PLConnective::AndC, std::move(a), std::move(b));
}
PLFormula pl_orc(PLFormula a, PLFormula b) {
  return binary(PLConnective::OrC, std::move(a), std::move(b));
}
PLFormula pl_forallc(std::string var, PLFormula f) {
  return quantified(PLConnective::ForallC, std::move(var), std::move(f));
}
PLFormula pl_existsc(std::string var, PLFormula f) {
  return quantified(PLConnective::ExistsC, std::move(var), std::move(f));
}

Context encode_pl_language(const PLLanguage& lang) {
  Context out;
  std::set<std::string> seen;
  auto entry = [&](const std::pair<std::string, int>& sym, const Term& target) {
    if (!seen.insert(sym.first).second)
      fail(ErrorCode::DuplicateSymbol, "symbol " + sym.first + " declared twice");
    Term ty = target;
    for (int i = 0; i < sym.second; ++i) ty = arrow(cnst("I"), ty);
    out.push_back({sym.first, ty});
  };
  for (const auto& f : lang.functions) entry(f, cnst("I"));
  for (const auto& p : lang.predicates) entry(p, cnst("Prop"));
  return out;
}

namespace {

int arity_of(const std::vector<std::pair<std::string, int>>& symbols, const std::string& name) {
  for (const auto& [n, a] : symbols)
    if (n == name) return a;
  return -1;
}

Term encode_term(const PLLanguage& lang, const PLTerm& t) {
  if (t.is_var) return var(t.head);
  int arity = arity_of(lang.functions, t.head);
  if (arity < 0)
    fail(ErrorCode::UnknownSymbol, "function symbol " + t.head + " is not in the language");
  if (arity != static_cast<int>(t.args.size()))
    fail(ErrorCode::ArityMismatch, t.head + " expects " + std::to_string(arity) +
                                       " arguments, got " + std::to_string(t.args.size()));
  Term out = var(t.head);
  for (const auto& a : t.args) out = app(out, encode_term(lang, a));
  return out;
}

Term encode_formula(const PLLanguage& lang, const PLFormula& f);

Term encode_quantifier(const PLLanguage& lang, const char* constant, const PLFormula& f) {
  Term body = encode_formula(lang, f.children.front());
  return app(cnst(constant), {cnst("iota"), lam(f.name, cnst("I"), body)});
}

Term encode_formula(const PLLanguage& lang, const PLFormula& f) {
  switch (f.kind) {
    case PLConnective::Atom: {
      int arity = arity_of(lang.predicates, f.name);
      if (arity < 0)
        fail(ErrorCode::UnknownSymbol, "predicate " + f.name + " is not in the language");
      if (arity != static_cast<int>(f.args.size()))
        fail(ErrorCode::ArityMismatch, f.name + " expects " + std::to_string(arity) +
                                           " arguments, got " + std::to_string(f.args.size()));
      Term out = var(f.name);
      for (const auto& a : f.args) out = app(out, encode_term(lang, a));
      return out;
    }
    case PLConnective::True:
      return cnst("top");
    case PLConnective::False:
      return cnst("bot");
    case PLConnective::Neg:
      return app(cnst("neg"), encode_formula(lang, f.children.front()));
    case PLConnective::And:
    case PLConnective::Or:
    case PLConnective::Imp:
    case PLConnective::AndC:
    case PLConnective::OrC:
    case PLConnective::ImpC: {
      const char* constant = f.kind == PLConnective::And   ? "and"
                             : f.kind == PLConnective::Or  ? "or"
                             : f.kind == PLConnective::Imp ? "imp"
                             : f.kind == PLConnective::AndC ? "andc"
                             : f.kind == PLConnective::OrC  ? "orc"
                                                            : "impc";
      return app(cnst(constant), {encode_formula(lang, f.children[0]),
                                  encode_formula(lang, f.children[1])});
    }
    case PLConnective::Forall:
      return encode_quantifier(lang, "all", f);
    case PLConnective::Exists:
      return encode_quantifier(lang, "ex", f);
    case PLConnective::ForallC:
      return encode_quantifier(lang, "allc", f);
    case PLConnective::ExistsC:
      return encode_quantifier(lang, "exc", f);
  }
  fail(ErrorCode::UnknownSymbol, "malformed formula");
}

void free_term_vars(const PLTerm& t, std::set<std::string>& bound,
                    std::vector<std::string>& out) {
  if (t.is_var) {
    if (!bound.count(t.head) && std::find(out.begin(), out.end(), t.head) == out.end())
      out.push_back(t.head);
    return;
  }
  for (const auto& a : t.args) free_term_vars(a, bound, out);
}

void free_formula_vars(const PLFormula& f, std::set<std::string>& bound,
                       std::vector<std::string>& out) {
  if (f.kind == PLConnective::Atom) {
    for (const auto& a : f.args) free_term_vars(a, bound, out);
    return;
  }
  bool quantifier = f.kind == PLConnective::Forall || f.kind == PLConnective::Exists ||
                    f.kind == PLConnective::ForallC || f.kind == PLConnective::ExistsC;
  bool fresh = quantifier && bound.insert(f.name).second;
  for (const auto& child : f.children) free_formula_vars(child, bound, out);
  if (fresh) bound.erase(f.name);
}

}  // namespace

Term encode_pl_formula(const PLLanguage& lang, const PLFormula& f) {
  return encode_formula(lang, f);
}

std::pair<Context, Term> encode_pl_sequent(const PLLanguage& lang,
                                           const std::vector<PLFormula>& hyps,
                                           const PLFormula& goal) {
  Context ctx = encode_pl_language(lang);

  std::vector<std::string> frees;
  std::set<std::string> bound;
  for (const auto& h : hyps) free_formula_vars(h, bound, frees);
  free_formula_vars(goal, bound, frees);
  for (const auto& z : frees) ctx.push_back({z, cnst("I")});

  int index = 0;
  for (const auto& h : hyps)
    ctx.push_back({"a" + std::to_string(++index), app(cnst("Prf"), encode_pl_formula(lang, h))});
  return {ctx, app(cnst("Prf"), encode_pl_formula(lang, goal))};
}

Theory encode_pts(const PtsSpec& spec) {
  std::set<std::string> sorts;
  for (const auto& s : spec.sorts)
    if (s.empty() || !sorts.insert(s).second)
      fail(ErrorCode::NonFunctionalSpec, "sort list is not a set of nonempty names");
  auto known = [&](const std::string& s) {
    if (!sorts.count(s)) fail(ErrorCode::UnknownSymbol, "sort " + s + " is not declared");
  };

  std::set<std::string> axiom_lhs;
  for (const auto& [s1, s2] : spec.axioms) {
    known(s1);
    known(s2);
    if (!axiom_lhs.insert(s1).second)
      fail(ErrorCode::NonFunctionalSpec, "sort " + s1 + " has two types");
  }
  std::set<std::pair<std::string, std::string>> rule_lhs;
  for (const auto& r : spec.rules) {
    for (const auto& s : r) known(s);
    if (!rule_lhs.insert({r[0], r[1]}).second)
      fail(ErrorCode::NonFunctionalSpec,
           "product on " + r[0] + ", " + r[1] + " has two result sorts");
  }

  Theory th("pts");
  auto U = [](const std::string& s) { return "U_" + s; };
  auto eps = [](const std::string& s) { return "eps_" + s; };
  for (const auto& s : spec.sorts) {
    th.append_declaration(U(s), type_sort());
    th.append_declaration(eps(s), arrow(cnst(U(s)), type_sort()));
  }
  for (const auto& [s1, s2] : spec.axioms) {
    std::string dot = "dot_" + s1;
    th.append_declaration(dot, cnst(U(s2)));
    RewriteRule r;
    r.name = dot + "-red";
    r.lhs = app(cnst(eps(s2)), cnst(dot));
    r.rhs = cnst(U(s1));
    th.add_rule(r, dot);
  }
  for (const auto& rule : spec.rules) {
    const std::string &s1 = rule[0], &s2 = rule[1], &s3 = rule[2];
    std::string prod = "Pi_" + s1 + "_" + s2 + "_" + s3;
    th.append_declaration(
        prod, pi("x", cnst(U(s1)),
                 arrow(arrow(app(cnst(eps(s1)), var("x")), cnst(U(s2))), cnst(U(s3)))));
    RewriteRule r;
    r.name = prod + "-red";
    r.lhs = app(cnst(eps(s3)), app(cnst(prod), {var("x"), var("y")}));
    r.rhs = pi("z", app(cnst(eps(s1)), var("x")), app(cnst(eps(s2)), app(var("y"), var("z"))));
    r.meta_ctx = {{"x", cnst(U(s1))}, {"y", arrow(app(cnst(eps(s1)), var("x")), cnst(U(s2)))}};
    th.add_rule(r, prod);
  }
  return th;
}

namespace {

Term rename_constants(const Term& t, const std::map<std::string, std::string>& renaming) {
  switch (t->kind) {
    case TermKind::Sort:
    case TermKind::Var:
    case TermKind::BVar:
      return t;
    case TermKind::Const: {
      auto it = renaming.find(t->name);
      return it == renaming.end() ? t : cnst(it->second);
    }
    case TermKind::App:
      return app(rename_constants(t->left, renaming), rename_constants(t->right, renaming));
    case TermKind::Prod:
      return prod(t->name, rename_constants(t->left, renaming),
                  rename_constants(t->right, renaming));
    case TermKind::Abs:
      return abs(t->name, rename_constants(t->left, renaming),
                 rename_constants(t->right, renaming));
  }
  return t;
}

// Rule metavariables are free variables with arbitrary names; number them in
// first-occurrence order so two rules compare independently of the naming.
Term canon_vars(const Term& t, std::map<std::string, std::string>& naming) {
  switch (t->kind) {
    case TermKind::Sort:
    case TermKind::Const:
    case TermKind::BVar:
      return t;
    case TermKind::Var: {
      auto it = naming.find(t->name);
      if (it == naming.end())
        it = naming.insert({t->name, "m" + std::to_string(naming.size() + 1)}).first;
      return var(it->second);
    }
    case TermKind::App:
      return app(canon_vars(t->left, naming), canon_vars(t->right, naming));
    case TermKind::Prod:
      return prod(t->name, canon_vars(t->left, naming), canon_vars(t->right, naming));
    case TermKind::Abs:
      return abs(t->name, canon_vars(t->left, naming), canon_vars(t->right, naming));
  }
  return t;
}

std::pair<Term, Term> canon_rule(const Term& lhs, const Term& rhs) {
  std::map<std::string, std::string> naming;
  Term l = canon_vars(lhs, naming);
  Term r = canon_vars(rhs, naming);
  return {l, r};
}

}  // namespace

bool pts_signature_isomorphic(const Theory& a, const Theory& b,
                              const std::map<std::string, std::string>& renaming) {
  if (a.sig().size() != b.sig().size() || a.rules().size() != b.rules().size()) return false;
  for (const auto& d : a.sig().declarations()) {
    auto it = renaming.find(d.name);
    const std::string target = it == renaming.end() ? d.name : it->second;
    const Declaration* bd = b.sig().find(target);
    if (!bd || !alpha_eq(rename_constants(d.type, renaming), bd->type)) return false;
  }
  for (const auto& ra : a.rules()) {
    const auto [lhs, rhs] =
        canon_rule(rename_constants(ra.lhs, renaming), rename_constants(ra.rhs, renaming));
    bool found = false;
    for (const auto& rb : b.rules()) {
      const auto [bl, br] = canon_rule(rb.lhs, rb.rhs);
      if (alpha_eq(lhs, bl) && alpha_eq(rhs, br)) found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace thu
