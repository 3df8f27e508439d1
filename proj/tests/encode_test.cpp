#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "thu/encode.hpp"
#include "thu/error.hpp"
#include "thu/print.hpp"
#include "thu/rewrite.hpp"
#include "thu/signature.hpp"
#include "thu/term.hpp"
#include "thu/theory_u.hpp"
#include "thu/typing.hpp"

using namespace thu;

namespace {

PLLanguage arith_lang() {
  PLLanguage lang;
  lang.functions = {{"c0", 0}, {"s", 1}};
  lang.predicates = {{"pos", 1}};
  return lang;
}

PLFormula pos_ssz() {
  return pl_atom("pos", {pl_fun("s", {pl_fun("s", {pl_fun("c0")})})});
}

}  // namespace

TEST_CASE("language symbols become first-order arrows over the domain") {
  Context ctx = encode_pl_language(arith_lang());
  REQUIRE(ctx.size() == 3);
  CHECK(ctx[0].first == "c0");
  CHECK(show_term(ctx[0].second) == "I");
  CHECK(ctx[1].first == "s");
  CHECK(show_term(ctx[1].second) == "I -> I");
  CHECK(ctx[2].first == "pos");
  CHECK(show_term(ctx[2].second) == "I -> Prop");
}

TEST_CASE("empty language encodes to an empty context") {
  CHECK(encode_pl_language({}).empty());
}

TEST_CASE("predicate arity iterates the arrow") {
  PLLanguage lang;
  lang.predicates = {{"R", 2}};
  Context ctx = encode_pl_language(lang);
  REQUIRE(ctx.size() == 1);
  CHECK(show_term(ctx[0].second) == "I -> I -> Prop");
}

TEST_CASE("repeated names in a language are refused") {
  PLLanguage lang;
  lang.functions = {{"f", 1}};
  lang.predicates = {{"f", 2}};
  CHECK_THROWS_WITH_AS(encode_pl_language(lang), "symbol f declared twice", Error);
  try {
    encode_pl_language(lang);
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::DuplicateSymbol);
  }
}

TEST_CASE("atoms apply the predicate to encoded arguments") {
  Term t = encode_pl_formula(arith_lang(), pos_ssz());
  CHECK(show_term(t) == "pos (s (s c0))");
  Theory u = theory_u();
  Context ctx = encode_pl_language(arith_lang());
  check(u, ctx, t, cnst("Prop"));
}

TEST_CASE("implication encodes to the implication constant") {
  Term t = encode_pl_formula(arith_lang(), pl_imp(pos_ssz(), pos_ssz()));
  CHECK(show_term(t) == "imp (pos (s (s c0))) (pos (s (s c0)))");
  check(theory_u(), encode_pl_language(arith_lang()), t, cnst("Prop"));
}

TEST_CASE("universal quantification abstracts over the domain") {
  Term t = encode_pl_formula(arith_lang(), pl_forall("z", pl_atom("pos", {pl_var("z")})));
  CHECK(show_term(t) == "all iota (\\z : I. pos z)");
  check(theory_u(), encode_pl_language(arith_lang()), t, cnst("Prop"));
}

TEST_CASE("language symbols stay variables in the encoded term") {
  Term t = encode_pl_formula(arith_lang(), pl_forall("z", pl_atom("pos", {pl_var("z")})));
  CHECK(free_vars(t) == std::set<std::string>{"pos"});
  CHECK(const_of(t) == std::set<std::string>{"all", "iota", "I"});
}

TEST_CASE("the constructive connective set checks at Prop") {
  PLFormula a = pos_ssz();
  PLFormula f = pl_or(pl_neg(a), pl_and(a, pl_true()));
  PLFormula g = pl_exists("z", pl_imp(pl_atom("pos", {pl_var("z")}), pl_false()));
  Theory u = theory_u();
  Context ctx = encode_pl_language(arith_lang());
  check(u, ctx, encode_pl_formula(arith_lang(), f), cnst("Prop"));
  check(u, ctx, encode_pl_formula(arith_lang(), g), cnst("Prop"));
  CHECK(show_term(encode_pl_formula(arith_lang(), g)) ==
        "ex iota (\\z : I. imp (pos z) bot)");
}

TEST_CASE("the classical connective set checks at Prop") {
  PLFormula a = pos_ssz();
  PLFormula f = pl_forallc("z", pl_impc(pl_atom("pos", {pl_var("z")}),
                                        pl_orc(a, pl_andc(a, a))));
  Term t = encode_pl_formula(arith_lang(), f);
  CHECK(const_of(t) ==
        std::set<std::string>{"allc", "iota", "I", "impc", "orc", "andc"});
  check(theory_u(), encode_pl_language(arith_lang()), t, cnst("Prop"));
}

TEST_CASE("unknown symbols and wrong arities are refused") {
  CHECK_THROWS_WITH_AS(encode_pl_formula(arith_lang(), pl_atom("even", {pl_fun("c0")})),
                       "predicate even is not in the language", Error);
  CHECK_THROWS_WITH_AS(encode_pl_formula(arith_lang(), pl_atom("pos", {pl_fun("twice", {pl_fun("c0")})})),
                       "function symbol twice is not in the language", Error);
  CHECK_THROWS_WITH_AS(encode_pl_formula(arith_lang(), pl_atom("pos", {pl_fun("s")})),
                       "s expects 1 arguments, got 0", Error);
  CHECK_THROWS_WITH_AS(encode_pl_formula(arith_lang(), pl_atom("pos", {})),
                       "pos expects 1 arguments, got 0", Error);
  try {
    encode_pl_formula(arith_lang(), pl_atom("pos", {}));
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::ArityMismatch);
  }
}

TEST_CASE("a hypothesis proves itself by projection") {
  PLFormula a = pos_ssz();
  auto [ctx, goal] = encode_pl_sequent(arith_lang(), {a}, a);
  REQUIRE(ctx.size() == 4);
  CHECK(ctx[3].first == "a1");
  CHECK(show_term(ctx[3].second) == "Prf (pos (s (s c0)))");
  CHECK(show_term(goal) == "Prf (pos (s (s c0)))");
  Theory u = theory_u();
  well_formed_ctx(u, ctx);
  check(u, ctx, var("a1"), goal);
}

TEST_CASE("the identity proves a formula implies itself") {
  PLFormula a = pos_ssz();
  auto [ctx, goal] = encode_pl_sequent(arith_lang(), {}, pl_imp(a, a));
  Term enc = encode_pl_formula(arith_lang(), a);
  Term candidate = lam("x", app(cnst("Prf"), enc), var("x"));
  check(theory_u(), ctx, candidate, goal);
}

TEST_CASE("a quantified implication is proved by two abstractions") {
  PLFormula inner = pl_atom("pos", {pl_var("z")});
  auto [ctx, goal] = encode_pl_sequent(arith_lang(), {}, pl_forall("z", pl_imp(inner, inner)));
  CHECK(show_term(goal) == "Prf (all iota (\\z : I. imp (pos z) (pos z)))");
  Term candidate = lam("z", cnst("I"),
                       lam("x", app(cnst("Prf"), app(var("pos"), var("z"))), var("x")));
  check(theory_u(), ctx, candidate, goal);
}

TEST_CASE("free variables land in the context in first-use order") {
  PLFormula hyp = pl_atom("pos", {pl_var("x")});
  PLFormula goal = pl_atom("pos", {pl_var("y")});
  auto [ctx, target] = encode_pl_sequent(arith_lang(), {hyp}, goal);
  REQUIRE(ctx.size() == 6);
  CHECK(ctx[3].first == "x");
  CHECK(show_term(ctx[3].second) == "I");
  CHECK(ctx[4].first == "y");
  CHECK(ctx[5].first == "a1");
  CHECK(show_term(target) == "Prf (pos y)");
  well_formed_ctx(theory_u(), ctx);
}

TEST_CASE("bound variables do not leak into the context") {
  PLFormula goal = pl_forall("z", pl_atom("pos", {pl_var("z")}));
  auto [ctx, target] = encode_pl_sequent(arith_lang(), {}, goal);
  CHECK(ctx.size() == 3);
  CHECK(show_term(target) == "Prf (all iota (\\z : I. pos z))");
}

TEST_CASE("a two-sort functional system with every product encodes to nine and five") {
  PtsSpec spec;
  spec.sorts = {"star", "box"};
  spec.axioms = {{"star", "box"}};
  spec.rules = {{"star", "star", "star"},
                {"star", "box", "box"},
                {"box", "star", "star"},
                {"box", "box", "box"}};
  Theory th = encode_pts(spec);
  CHECK(th.sig().size() == 9);
  CHECK(th.rules().size() == 5);
  CHECK(show_term(th.sig().type_of("U_star")) == "TYPE");
  CHECK(show_term(th.sig().type_of("eps_star")) == "U_star -> TYPE");
  CHECK(show_term(th.sig().type_of("dot_star")) == "U_box");
  CHECK(show_term(th.sig().type_of("Pi_box_star_star")) ==
        "!x : U_box. (eps_box x -> U_star) -> U_star");
  const RewriteRule* red = th.find_rule("Pi_star_star_star-red");
  REQUIRE(red != nullptr);
  CHECK(show_term(red->lhs) == "eps_star (Pi_star_star_star x y)");
  CHECK(show_term(red->rhs) == "!z : eps_star x. eps_star (y z)");
}

TEST_CASE("a dependently typed lambda calculus encodes to seven and three") {
  PtsSpec spec;
  spec.sorts = {"star", "box"};
  spec.axioms = {{"star", "box"}};
  spec.rules = {{"star", "star", "star"}, {"star", "box", "box"}};
  Theory th = encode_pts(spec);
  CHECK(th.sig().size() == 7);
  CHECK(th.rules().size() == 3);
}

TEST_CASE("non-functional systems are refused") {
  PtsSpec twice;
  twice.sorts = {"star", "box"};
  twice.axioms = {{"star", "box"}, {"star", "star"}};
  CHECK_THROWS_WITH_AS(encode_pts(twice), "sort star has two types", Error);
  try {
    encode_pts(twice);
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::NonFunctionalSpec);
  }

  PtsSpec products;
  products.sorts = {"star"};
  products.rules = {{"star", "star", "star"}, {"star", "star", "star"}};
  CHECK_THROWS_WITH_AS(encode_pts(products), "product on star, star has two result sorts", Error);

  PtsSpec dup;
  dup.sorts = {"star", "star"};
  CHECK_THROWS_AS(encode_pts(dup), Error);

  PtsSpec unknown;
  unknown.sorts = {"star"};
  unknown.axioms = {{"star", "box"}};
  CHECK_THROWS_WITH_AS(encode_pts(unknown), "sort box is not declared", Error);
}

TEST_CASE("encoded systems are orthogonal and preservation-clean") {
  PtsSpec spec;
  spec.sorts = {"star", "box"};
  spec.axioms = {{"star", "box"}};
  spec.rules = {{"star", "star", "star"},
                {"star", "box", "box"},
                {"box", "star", "star"},
                {"box", "box", "box"}};
  Theory th = encode_pts(spec);
  OrthogonalityReport ortho = check_orthogonality(th.rules());
  CHECK(ortho.verdict);
  CHECK(ortho.overlaps.empty());
  for (const auto& r : th.rules()) {
    PreservationReport rep = check_rule_preservation(th, r);
    INFO(r.name);
    CHECK(rep.verdict);
  }
}

TEST_CASE("the full two-sort system is the catalog's dependent-product theory") {
  PtsSpec spec;
  spec.sorts = {"star", "box"};
  spec.axioms = {{"star", "box"}};
  spec.rules = {{"star", "star", "star"},
                {"star", "box", "box"},
                {"box", "star", "star"},
                {"box", "box", "box"}};
  Theory th = encode_pts(spec);
  std::map<std::string, std::string> renaming = {
      {"U_star", "Prop"},          {"eps_star", "Prf"},
      {"U_box", "Set"},            {"eps_box", "El"},
      {"dot_star", "o"},           {"Pi_star_star_star", "impd"},
      {"Pi_box_star_star", "all"}, {"Pi_star_box_box", "pi"},
      {"Pi_box_box_box", "arrd"}};
  CHECK(pts_signature_isomorphic(th, subtheory("calculus-of-constructions"), renaming));

  std::map<std::string, std::string> swapped = renaming;
  swapped["Pi_star_star_star"] = "arrd";
  swapped["Pi_box_box_box"] = "impd";
  CHECK_FALSE(pts_signature_isomorphic(th, subtheory("calculus-of-constructions"), swapped));
}

TEST_CASE("isomorphism under the identity renaming and size mismatches") {
  PtsSpec spec;
  spec.sorts = {"star", "box"};
  spec.axioms = {{"star", "box"}};
  spec.rules = {{"star", "star", "star"}, {"star", "box", "box"}};
  Theory th = encode_pts(spec);
  CHECK(pts_signature_isomorphic(th, th, {}));

  PtsSpec bigger = spec;
  bigger.rules.push_back({"box", "box", "box"});
  CHECK_FALSE(pts_signature_isomorphic(th, encode_pts(bigger), {}));
}
