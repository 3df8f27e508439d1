#include "doctest.h"
#include "thu/error.hpp"
#include "thu/term.hpp"

using namespace thu;

TEST_CASE("sorts") {
  CHECK(is_type(type_sort()));
  CHECK_FALSE(is_kind(type_sort()));
  CHECK(is_kind(kind_sort()));
  CHECK(alpha_eq(type_sort(), type_sort()));
  CHECK_FALSE(alpha_eq(type_sort(), kind_sort()));
}

TEST_CASE("alpha equivalence ignores binder hints") {
  Term a = cnst("A");
  CHECK(alpha_eq(lam("x", a, var("x")), lam("y", a, var("y"))));
  CHECK(alpha_eq(pi("x", a, var("x")), pi("y", a, var("y"))));
  CHECK_FALSE(alpha_eq(lam("x", a, var("x")), lam("x", a, cnst("A"))));
}

TEST_CASE("alpha equivalence distinguishes which binder is used") {
  Term a = cnst("A");
  Term fst_of_two = lam("x", a, lam("y", a, var("x")));
  Term snd_of_two = lam("x", a, lam("y", a, var("y")));
  CHECK_FALSE(alpha_eq(fst_of_two, snd_of_two));
  CHECK(alpha_eq(fst_of_two, lam("u", a, lam("v", a, var("u")))));
}

TEST_CASE("free variables and constants") {
  Term t = app(cnst("f"), lam("x", cnst("A"), app(var("x"), var("y"))));
  CHECK(free_vars(t) == std::set<std::string>{"y"});
  CHECK(const_of(t) == std::set<std::string>{"f", "A"});
}

TEST_CASE("substitution replaces only the named free variable") {
  Term t = app(var("x"), lam("x", cnst("A"), var("x")));
  Term r = subst(t, "x", cnst("c"));
  CHECK(alpha_eq(r, app(cnst("c"), lam("x", cnst("A"), var("x")))));
}

TEST_CASE("substitution cannot capture") {
  // (\y:A. x)[x := y] keeps the substituted y free: binding is by index,
  // the hint "y" on the binder is only a name suggestion
  Term t = lam("y", cnst("A"), var("x"));
  Term r = subst(t, "x", var("y"));
  CHECK(alpha_eq(r, abs("z", cnst("A"), var("y"))));
  CHECK(free_vars(r) == std::set<std::string>{"y"});
}

TEST_CASE("open and close are mutually inverse") {
  Term t = app(var("x"), cnst("c"));
  Term body = close_binder(t, "x");
  CHECK(alpha_eq(open_binder(body, var("x")), t));
  CHECK(alpha_eq(open_binder(body, cnst("d")), app(cnst("d"), cnst("c"))));
}

TEST_CASE("binding constructors close over the name") {
  Term id = lam("x", cnst("A"), var("x"));
  CHECK(free_vars(id).empty());
  CHECK(body_uses_binder(id));
  Term k = lam("x", cnst("A"), cnst("c"));
  CHECK_FALSE(body_uses_binder(k));
}

TEST_CASE("arrow builds a product that ignores its binder") {
  Term t = arrow(cnst("A"), cnst("B"));
  CHECK(t->kind == TermKind::Prod);
  CHECK_FALSE(body_uses_binder(t));
  CHECK(alpha_eq(t, pi("x", cnst("A"), cnst("B"))));
}

TEST_CASE("application spine helper") {
  Term t = app(cnst("f"), {var("a"), var("b"), var("c")});
  CHECK(t->kind == TermKind::App);
  CHECK(alpha_eq(t, app(app(app(cnst("f"), var("a")), var("b")), var("c"))));
}

TEST_CASE("depth and size") {
  CHECK(term_depth(cnst("c")) == 1);
  CHECK(term_depth(app(cnst("f"), cnst("c"))) == 2);
  CHECK(term_size(app(cnst("f"), cnst("c"))) == 3);
}

TEST_CASE("fresh names never collide with parsed identifiers") {
  std::string a = fresh_name();
  std::string b = fresh_name();
  CHECK(a != b);
  CHECK(a.find('$') != std::string::npos);
}

TEST_CASE("local closure") {
  CHECK(locally_closed(lam("x", cnst("A"), var("x"))));
  CHECK_FALSE(locally_closed(bvar(0)));
}
