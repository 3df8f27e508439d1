#include "thu/term.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <utility>

namespace thu {

namespace {

Term make(TermNode node) { return std::make_shared<const TermNode>(std::move(node)); }

const Term& cached_type() {
  static const Term t = make({TermKind::Sort, false, "", 0, nullptr, nullptr});
  return t;
}

const Term& cached_kind() {
  static const Term t = make({TermKind::Sort, true, "", 0, nullptr, nullptr});
  return t;
}

}  // namespace

Term type_sort() { return cached_type(); }
Term kind_sort() { return cached_kind(); }

Term cnst(std::string name) {
  return make({TermKind::Const, false, std::move(name), 0, nullptr, nullptr});
}

Term var(std::string name) {
  return make({TermKind::Var, false, std::move(name), 0, nullptr, nullptr});
}

Term bvar(int index) {
  assert(index >= 0);
  return make({TermKind::BVar, false, "", index, nullptr, nullptr});
}

Term app(Term f, Term a) {
  assert(f && a);
  return make({TermKind::App, false, "", 0, std::move(f), std::move(a)});
}

Term app(Term f, std::initializer_list<Term> args) {
  Term t = std::move(f);
  for (const Term& a : args) t = app(t, a);
  return t;
}

Term prod(std::string hint, Term domain, Term body) {
  assert(domain && body);
  return make({TermKind::Prod, false, std::move(hint), 0, std::move(domain), std::move(body)});
}

Term abs(std::string hint, Term domain, Term body) {
  assert(domain && body);
  return make({TermKind::Abs, false, std::move(hint), 0, std::move(domain), std::move(body)});
}

Term pi(const std::string& x, const Term& domain, const Term& codomain) {
  return prod(x, domain, close_binder(codomain, x));
}

Term lam(const std::string& x, const Term& domain, const Term& body) {
  return abs(x, domain, close_binder(body, x));
}

Term arrow(const Term& domain, const Term& codomain) {
  // Unused binder: the codomain is already closed, no occurrence of bvar(0).
  return prod("_", domain, codomain);
}

bool is_type(const Term& t) { return t->kind == TermKind::Sort && !t->is_kind; }
bool is_kind(const Term& t) { return t->kind == TermKind::Sort && t->is_kind; }

namespace {

bool uses_index(const Term& t, int index) {
  switch (t->kind) {
    case TermKind::BVar:
      return t->index == index;
    case TermKind::App:
      return uses_index(t->left, index) || uses_index(t->right, index);
    case TermKind::Prod:
    case TermKind::Abs:
      return uses_index(t->left, index) || uses_index(t->right, index + 1);
    default:
      return false;
  }
}

}  // namespace

bool body_uses_binder(const Term& binder_term) {
  assert(binder_term->kind == TermKind::Prod || binder_term->kind == TermKind::Abs);
  return uses_index(binder_term->right, 0);
}

bool alpha_eq(const Term& a, const Term& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Sort:
      return a->is_kind == b->is_kind;
    case TermKind::Const:
    case TermKind::Var:
      return a->name == b->name;
    case TermKind::BVar:
      return a->index == b->index;
    case TermKind::App:
    case TermKind::Prod:
    case TermKind::Abs:
      return alpha_eq(a->left, b->left) && alpha_eq(a->right, b->right);
  }
  return false;
}

Term subst(const Term& t, const std::string& x, const Term& u) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name == x ? u : t;
    case TermKind::Sort:
    case TermKind::Const:
    case TermKind::BVar:
      return t;
    case TermKind::App: {
      Term l = subst(t->left, x, u);
      Term r = subst(t->right, x, u);
      if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
      return app(std::move(l), std::move(r));
    }
    case TermKind::Prod:
    case TermKind::Abs: {
      // u is locally closed and binders only capture BVars, so descending
      // under the binder is safe without shifting.
      Term l = subst(t->left, x, u);
      Term r = subst(t->right, x, u);
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

Term open_at(const Term& t, int depth, const Term& u) {
  switch (t->kind) {
    case TermKind::BVar:
      return t->index == depth ? u : t;
    case TermKind::Sort:
    case TermKind::Const:
    case TermKind::Var:
      return t;
    case TermKind::App: {
      Term l = open_at(t->left, depth, u);
      Term r = open_at(t->right, depth, u);
      if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
      return app(std::move(l), std::move(r));
    }
    case TermKind::Prod:
    case TermKind::Abs: {
      Term l = open_at(t->left, depth, u);
      Term r = open_at(t->right, depth + 1, u);
      if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
      TermNode node = *t;
      node.left = std::move(l);
      node.right = std::move(r);
      return std::make_shared<const TermNode>(std::move(node));
    }
  }
  return t;
}

Term close_at(const Term& t, int depth, const std::string& x) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name == x ? bvar(depth) : t;
    case TermKind::Sort:
    case TermKind::Const:
    case TermKind::BVar:
      return t;
    case TermKind::App: {
      Term l = close_at(t->left, depth, x);
      Term r = close_at(t->right, depth, x);
      if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
      return app(std::move(l), std::move(r));
    }
    case TermKind::Prod:
    case TermKind::Abs: {
      Term l = close_at(t->left, depth, x);
      Term r = close_at(t->right, depth + 1, x);
      if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
      TermNode node = *t;
      node.left = std::move(l);
      node.right = std::move(r);
      return std::make_shared<const TermNode>(std::move(node));
    }
  }
  return t;
}

void collect_free(const Term& t, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var:
      out.insert(t->name);
      return;
    case TermKind::App:
    case TermKind::Prod:
    case TermKind::Abs:
      collect_free(t->left, out);
      collect_free(t->right, out);
      return;
    default:
      return;
  }
}

void collect_consts(const Term& t, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Const:
      out.insert(t->name);
      return;
    case TermKind::App:
    case TermKind::Prod:
    case TermKind::Abs:
      collect_consts(t->left, out);
      collect_consts(t->right, out);
      return;
    default:
      return;
  }
}

bool closed_below(const Term& t, int depth) {
  switch (t->kind) {
    case TermKind::BVar:
      return t->index < depth;
    case TermKind::App:
      return closed_below(t->left, depth) && closed_below(t->right, depth);
    case TermKind::Prod:
    case TermKind::Abs:
      return closed_below(t->left, depth) && closed_below(t->right, depth + 1);
    default:
      return true;
  }
}

}  // namespace

Term open_binder(const Term& body, const Term& u) { return open_at(body, 0, u); }

Term close_binder(const Term& t, const std::string& x) { return close_at(t, 0, x); }

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

std::set<std::string> const_of(const Term& t) {
  std::set<std::string> out;
  collect_consts(t, out);
  return out;
}

bool locally_closed(const Term& t) { return closed_below(t, 0); }

std::string fresh_name() {
  // '$' is not an identifier character in the surface syntax, so these can
  // never collide with any name originating from user input.
  static std::atomic<unsigned long> counter{0};
  return "$" + std::to_string(counter.fetch_add(1));
}

int term_depth(const Term& t) {
  switch (t->kind) {
    case TermKind::App:
    case TermKind::Prod:
    case TermKind::Abs:
      return 1 + std::max(term_depth(t->left), term_depth(t->right));
    default:
      return 1;
  }
}

int term_size(const Term& t) {
  switch (t->kind) {
    case TermKind::App:
    case TermKind::Prod:
    case TermKind::Abs:
      return 1 + term_size(t->left) + term_size(t->right);
    default:
      return 1;
  }
}

}  // namespace thu
