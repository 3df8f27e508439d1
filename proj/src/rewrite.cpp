#include "thu/rewrite.hpp"

#include <cassert>

#include "thu/error.hpp"

namespace thu {

namespace {

void require_first_order(const Term& pattern) {
  switch (pattern->kind) {
    case TermKind::Prod:
    case TermKind::Abs:
      fail(ErrorCode::UnsupportedPattern, "pattern contains a binder");
    case TermKind::BVar:
      fail(ErrorCode::UnsupportedPattern, "pattern contains a bound variable");
    case TermKind::App:
      require_first_order(pattern->left);
      require_first_order(pattern->right);
      return;
    default:
      return;
  }
}

bool match_into(const Term& pattern, const Term& subject, Substitution& sub) {
  switch (pattern->kind) {
    case TermKind::Var: {
      auto it = sub.find(pattern->name);
      if (it != sub.end()) return alpha_eq(it->second, subject);
      sub.emplace(pattern->name, subject);
      return true;
    }
    case TermKind::Const:
      return subject->kind == TermKind::Const && subject->name == pattern->name;
    case TermKind::Sort:
      return subject->kind == TermKind::Sort && subject->is_kind == pattern->is_kind;
    case TermKind::App:
      return subject->kind == TermKind::App && match_into(pattern->left, subject->left, sub) &&
             match_into(pattern->right, subject->right, sub);
    default:
      return false;  // unreachable after require_first_order
  }
}

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& subject) {
  require_first_order(pattern);
  Substitution sub;
  if (match_into(pattern, subject, sub)) return sub;
  return std::nullopt;
}

Term msubst(const Term& t, const Substitution& sub) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = sub.find(t->name);
      return it == sub.end() ? t : it->second;
    }
    case TermKind::Sort:
    case TermKind::Const:
    case TermKind::BVar:
      return t;
    case TermKind::App: {
      Term l = msubst(t->left, sub);
      Term r = msubst(t->right, sub);
      if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
      return app(std::move(l), std::move(r));
    }
    case TermKind::Prod:
    case TermKind::Abs: {
      Term l = msubst(t->left, sub);
      Term r = msubst(t->right, sub);
      if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
      TermNode node = *t;
      node.left = std::move(l);
      node.right = std::move(r);
      return std::make_shared<const TermNode>(std::move(node));
    }
  }
  return t;
}

namespace {

std::optional<StepResult> root_step(const std::vector<RewriteRule>& rules, const Term& t) {
  if (t->kind == TermKind::App && t->left->kind == TermKind::Abs)
    return StepResult{open_binder(t->left->right, t->right), true, ""};
  for (const RewriteRule& rule : rules) {
    Substitution sub;
    if (match_into(rule.lhs, t, sub)) return StepResult{msubst(rule.rhs, sub), false, rule.name};
  }
  return std::nullopt;
}

std::optional<StepResult> step_at(const std::vector<RewriteRule>& rules, const Term& t,
                                  Strategy strategy);

// Steps inside a binder by opening it with a fresh variable first, so rule
// and beta contractions never have to shift de Bruijn indices.
std::optional<StepResult> step_under(const std::vector<RewriteRule>& rules, const Term& t,
                                     Strategy strategy) {
  std::string x = fresh_name();
  Term opened = open_binder(t->right, var(x));
  auto inner = step_at(rules, opened, strategy);
  if (!inner) return std::nullopt;
  TermNode node = *t;
  node.right = close_binder(inner->term, x);
  inner->term = std::make_shared<const TermNode>(std::move(node));
  return inner;
}

std::optional<StepResult> replace_child(const Term& t, bool left_child,
                                        std::optional<StepResult> inner) {
  if (!inner) return std::nullopt;
  TermNode node = *t;
  (left_child ? node.left : node.right) = inner->term;
  inner->term = std::make_shared<const TermNode>(std::move(node));
  return inner;
}

std::optional<StepResult> step_at(const std::vector<RewriteRule>& rules, const Term& t,
                                  Strategy strategy) {
  if (strategy == Strategy::LeftmostOutermost) {
    if (auto r = root_step(rules, t)) return r;
    switch (t->kind) {
      case TermKind::App:
        if (auto r = replace_child(t, true, step_at(rules, t->left, strategy))) return r;
        return replace_child(t, false, step_at(rules, t->right, strategy));
      case TermKind::Prod:
      case TermKind::Abs:
        if (auto r = replace_child(t, true, step_at(rules, t->left, strategy))) return r;
        return step_under(rules, t, strategy);
      default:
        return std::nullopt;
    }
  }
  // Rightmost-innermost: children first, right before left, root last.
  switch (t->kind) {
    case TermKind::App:
      if (auto r = replace_child(t, false, step_at(rules, t->right, strategy))) return r;
      if (auto r = replace_child(t, true, step_at(rules, t->left, strategy))) return r;
      break;
    case TermKind::Prod:
    case TermKind::Abs:
      if (auto r = step_under(rules, t, strategy)) return r;
      if (auto r = replace_child(t, true, step_at(rules, t->left, strategy))) return r;
      break;
    default:
      break;
  }
  return root_step(rules, t);
}

}  // namespace

std::optional<StepResult> step(const std::vector<RewriteRule>& rules, const Term& t,
                               Strategy strategy) {
  for (const RewriteRule& rule : rules) require_first_order(rule.lhs);
  return step_at(rules, t, strategy);
}

NormalizeResult normalize(const std::vector<RewriteRule>& rules, const Term& t, long fuel,
                          Strategy strategy) {
  if (fuel <= 0) fail(ErrorCode::FuelExhausted, "normalization started with no fuel");
  for (const RewriteRule& rule : rules) require_first_order(rule.lhs);
  Term cur = t;
  long steps = 0;
  while (auto next = step_at(rules, cur, strategy)) {
    if (steps == fuel)
      fail(ErrorCode::FuelExhausted,
           "no normal form within " + std::to_string(fuel) + " steps");
    cur = next->term;
    ++steps;
  }
  return {cur, steps};
}

bool convertible(const std::vector<RewriteRule>& rules, const Term& a, const Term& b, long fuel) {
  if (alpha_eq(a, b)) return true;
  return alpha_eq(normalize(rules, a, fuel).term, normalize(rules, b, fuel).term);
}

namespace {

// ---- first-order unification for the overlap check ----

Term walk(const Term& t, const Substitution& sub) {
  Term cur = t;
  while (cur->kind == TermKind::Var) {
    auto it = sub.find(cur->name);
    if (it == sub.end()) break;
    cur = it->second;
  }
  return cur;
}

bool occurs(const std::string& x, const Term& t, const Substitution& sub) {
  Term w = walk(t, sub);
  switch (w->kind) {
    case TermKind::Var:
      return w->name == x;
    case TermKind::App:
      return occurs(x, w->left, sub) || occurs(x, w->right, sub);
    default:
      return false;
  }
}

bool unify(const Term& a, const Term& b, Substitution& sub) {
  Term x = walk(a, sub);
  Term y = walk(b, sub);
  if (x->kind == TermKind::Var) {
    if (y->kind == TermKind::Var && y->name == x->name) return true;
    if (occurs(x->name, y, sub)) return false;
    sub.emplace(x->name, y);
    return true;
  }
  if (y->kind == TermKind::Var) return unify(y, x, sub);
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case TermKind::Const:
      return x->name == y->name;
    case TermKind::Sort:
      return x->is_kind == y->is_kind;
    case TermKind::App:
      return unify(x->left, y->left, sub) && unify(x->right, y->right, sub);
    default:
      return false;
  }
}

Term rename_vars(const Term& t, const std::string& prefix) {
  switch (t->kind) {
    case TermKind::Var:
      return var(prefix + t->name);
    case TermKind::App:
      return app(rename_vars(t->left, prefix), rename_vars(t->right, prefix));
    default:
      return t;
  }
}

// All non-variable proper subterm positions of a binder-free pattern.
void proper_positions(const Term& t, const std::string& path, bool is_root,
                      std::vector<std::pair<std::string, Term>>& out) {
  if (!is_root && t->kind != TermKind::Var) out.emplace_back(path, t);
  if (t->kind == TermKind::App) {
    proper_positions(t->left, path.empty() ? "1" : path + ".1", false, out);
    proper_positions(t->right, path.empty() ? "2" : path + ".2", false, out);
  }
}

}  // namespace

OrthogonalityReport check_orthogonality(const std::vector<RewriteRule>& rules) {
  OrthogonalityReport report;
  report.beta_note =
      "beta redexes are abstraction-headed and patterns are binder-free, so no "
      "rule pattern can overlap a beta redex";

  bool all_linear = true;
  for (const RewriteRule& rule : rules) {
    require_first_order(rule.lhs);
    std::map<std::string, int> occurrences;
    // walk the pattern counting variable occurrences
    std::vector<Term> stack{rule.lhs};
    while (!stack.empty()) {
      Term cur = stack.back();
      stack.pop_back();
      if (cur->kind == TermKind::Var) ++occurrences[cur->name];
      if (cur->kind == TermKind::App) {
        stack.push_back(cur->left);
        stack.push_back(cur->right);
      }
    }
    bool linear = true;
    for (const auto& entry : occurrences)
      if (entry.second > 1) linear = false;
    report.left_linear.emplace_back(rule.name, linear);
    all_linear = all_linear && linear;
  }

  for (const RewriteRule& outer : rules) {
    Term outer_lhs = rename_vars(outer.lhs, "o$");
    std::vector<std::pair<std::string, Term>> positions;
    proper_positions(outer_lhs, "", true, positions);
    for (const RewriteRule& inner : rules) {
      Term inner_lhs = rename_vars(inner.lhs, "i$");
      // Root-with-root overlaps count once per unordered pair of distinct
      // rules; a rule trivially unifies with itself at the root.
      if (outer.name < inner.name) {
        Substitution sub;
        if (unify(outer_lhs, inner_lhs, sub))
          report.overlaps.push_back({outer.name, inner.name, ""});
      }
      for (const auto& [path, sub_term] : positions) {
        Substitution sub;
        if (unify(sub_term, inner_lhs, sub))
          report.overlaps.push_back({outer.name, inner.name, path});
      }
    }
  }

  report.verdict = all_linear && report.overlaps.empty();
  return report;
}

}  // namespace thu
