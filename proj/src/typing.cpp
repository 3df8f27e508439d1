#include "thu/typing.hpp"

#include <algorithm>

#include "thu/error.hpp"
#include "thu/print.hpp"

namespace thu {

namespace {

const Term* ctx_lookup(const Context& ctx, const std::string& name) {
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

bool is_sort_term(const Term& t) { return t->kind == TermKind::Sort; }

}  // namespace

void well_formed_ctx(const Theory& theory, const Context& ctx, long fuel) {
  Context prefix;
  for (const auto& [name, type] : ctx) {
    if (ctx_lookup(prefix, name))
      fail(ErrorCode::IllFormedContext, "duplicate context variable " + name);
    Term sort;
    try {
      sort = normalize(theory.rules(), infer(theory, prefix, type, fuel), fuel).term;
    } catch (const Error& e) {
      fail(ErrorCode::IllFormedContext,
           "type of context variable " + name + " is ill-formed: " + e.what());
    }
    if (!is_sort_term(sort))
      fail(ErrorCode::IllFormedContext,
           "type of context variable " + name + " is not typed by a sort");
    prefix.emplace_back(name, type);
  }
}

Term infer(const Theory& theory, const Context& ctx, const Term& t, long fuel) {
  switch (t->kind) {
    case TermKind::Sort:
      if (t->is_kind) fail(ErrorCode::UntypableSort, "KIND has no type");
      return kind_sort();
    case TermKind::Const: {
      const Declaration* d = theory.sig().find(t->name);
      if (!d) fail(ErrorCode::UnknownConstant, "undeclared constant: " + t->name);
      return d->type;
    }
    case TermKind::Var: {
      const Term* type = ctx_lookup(ctx, t->name);
      if (!type) fail(ErrorCode::UnknownVariable, "variable not in context: " + t->name);
      return *type;
    }
    case TermKind::BVar:
      fail(ErrorCode::UnknownVariable, "dangling bound variable");
    case TermKind::App: {
      Term fun_type = normalize(theory.rules(), infer(theory, ctx, t->left, fuel), fuel).term;
      if (fun_type->kind != TermKind::Prod)
        fail(ErrorCode::NotAFunction,
             "applied term has type " + show_term(fun_type) + ", not a product");
      Term arg_type = infer(theory, ctx, t->right, fuel);
      if (!convertible(theory.rules(), arg_type, fun_type->left, fuel))
        fail(ErrorCode::DomainMismatch, "argument has type " + show_term(arg_type) +
                                            ", expected " + show_term(fun_type->left));
      return open_binder(fun_type->right, t->right);
    }
    case TermKind::Prod: {
      Term dom_sort = normalize(theory.rules(), infer(theory, ctx, t->left, fuel), fuel).term;
      if (!is_type(dom_sort))
        fail(ErrorCode::IllFormedDomain, "product domain must be of sort TYPE");
      std::string x = fresh_name();
      Context extended = ctx;
      extended.emplace_back(x, t->left);
      Term body = open_binder(t->right, var(x));
      Term cod_sort = normalize(theory.rules(), infer(theory, extended, body, fuel), fuel).term;
      if (!is_sort_term(cod_sort))
        fail(ErrorCode::IllFormedDomain, "product codomain is not typed by a sort");
      return cod_sort;
    }
    case TermKind::Abs: {
      Term dom_sort = normalize(theory.rules(), infer(theory, ctx, t->left, fuel), fuel).term;
      if (!is_type(dom_sort))
        fail(ErrorCode::IllFormedDomain, "abstraction domain must be of sort TYPE");
      std::string x = fresh_name();
      Context extended = ctx;
      extended.emplace_back(x, t->left);
      Term body_type = infer(theory, extended, open_binder(t->right, var(x)), fuel);
      // The (abs) side condition: the body's type must itself live in a sort,
      // which rules out bodies of type KIND (sorts and kind-level products).
      if (is_kind(body_type))
        fail(ErrorCode::UntypableSort, "abstraction body is a sort-level term");
      return prod(t->name, t->left, close_binder(body_type, x));
    }
  }
  fail(ErrorCode::UnknownVariable, "unreachable term kind");
}

void check(const Theory& theory, const Context& ctx, const Term& t, const Term& type, long fuel) {
  if (is_kind(type)) {
    Term inferred = infer(theory, ctx, t, fuel);
    if (!is_kind(inferred))
      fail(ErrorCode::TypeMismatch,
           "inferred " + show_term(inferred) + ", expected " + show_term(type));
    return;
  }
  Term type_sort_term = normalize(theory.rules(), infer(theory, ctx, type, fuel), fuel).term;
  if (!is_sort_term(type_sort_term))
    fail(ErrorCode::IllFormedDomain, "expected type is not typed by a sort");
  Term inferred = infer(theory, ctx, t, fuel);
  if (!convertible(theory.rules(), inferred, type, fuel))
    fail(ErrorCode::TypeMismatch,
         "inferred " + show_term(inferred) + ", expected " + show_term(type));
}

PreservationReport check_rule_preservation(const Theory& theory, const RewriteRule& rule,
                                           long fuel) {
  PreservationReport report;
  report.rule = rule.name;

  Substitution equations;
  for (const auto& [v, replacement] : rule.lhs_equations) {
    bool annotated = false;
    for (const auto& entry : rule.meta_ctx) annotated = annotated || entry.first == v;
    if (!annotated) {
      report.note = "equation variable " + v + " is not annotated";
      fail(ErrorCode::MissingAnnotation, report.note);
    }
    equations.emplace(v, replacement);
    report.used_equations.push_back(v + " = " + show_term(replacement));
  }

  Term lhs = msubst(rule.lhs, equations);
  Term rhs = msubst(rule.rhs, equations);
  Context ctx;
  for (const auto& [name, type] : rule.meta_ctx) {
    if (equations.count(name)) continue;
    ctx.emplace_back(name, msubst(type, equations));
  }

  std::set<std::string> annotated;
  for (const auto& entry : ctx) annotated.insert(entry.first);
  std::set<std::string> used = free_vars(lhs);
  for (const std::string& v : free_vars(rhs)) used.insert(v);
  for (const std::string& v : used)
    if (!annotated.count(v))
      fail(ErrorCode::MissingAnnotation,
           "rule " + rule.name + ": pattern variable " + v + " lacks a type annotation");

  try {
    well_formed_ctx(theory, ctx, fuel);
    report.lhs_type = infer(theory, ctx, lhs, fuel);
    report.rhs_type = infer(theory, ctx, rhs, fuel);
  } catch (const Error& e) {
    report.verdict = false;
    report.note = e.what();
    return report;
  }
  report.verdict = convertible(theory.rules(), report.lhs_type, report.rhs_type, fuel);
  if (!report.verdict)
    report.note = "sides have non-convertible types " + show_term(report.lhs_type) + " and " +
                  show_term(report.rhs_type);
  return report;
}

void lint_no_dagger(const Theory& theory, const Term& t) {
  std::set<std::string> used = const_of(t);
  for (const Declaration& d : theory.sig().declarations())
    if (d.dagger && used.count(d.name))
      fail(ErrorCode::ReservedConstant,
           "constant " + d.name + " is reserved for internal reduction");
}

}  // namespace thu
