// Release gate: ten checks over the built-in theory, the kernel, and the
// tooling. Prints one line per criterion and exits nonzero when any fail.
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gen.hpp"
#include "oracle.hpp"
#include "properties.hpp"
#include "thu/encode.hpp"
#include "thu/error.hpp"
#include "thu/fragment.hpp"
#include "thu/print.hpp"
#include "thu/rewrite.hpp"
#include "thu/signature.hpp"
#include "thu/term.hpp"
#include "thu/theory_u.hpp"
#include "thu/typing.hpp"

using namespace thu;

namespace {

struct Gate {
  std::vector<std::string> issues;
  void expect(bool ok, const std::string& what) {
    if (!ok) issues.push_back(what);
  }
};

Term c(const char* n) { return cnst(n); }

void census(Gate& g) {
  Theory u = theory_u();
  g.expect(u.sig().size() == 43, "expected 43 declarations, found " +
                                     std::to_string(u.sig().size()));
  g.expect(u.rules().size() == 31,
           "expected 31 rules, found " + std::to_string(u.rules().size()));
  std::map<std::size_t, int> histogram;
  for (const auto& cl : u.clusters()) ++histogram[cl.rule_names.size()];
  g.expect(histogram == std::map<std::size_t, int>{{0, 14}, {1, 27}, {2, 2}},
           "cluster histogram is not 14/27/2");
}

void orthogonality(Gate& g) {
  OrthogonalityReport rep = check_orthogonality(theory_u().rules());
  g.expect(rep.left_linear.size() == 31, "left-linearity table is not over 31 rules");
  for (const auto& [name, linear] : rep.left_linear)
    g.expect(linear, "rule " + name + " is not left-linear");
  g.expect(rep.overlaps.empty(),
           "found " + std::to_string(rep.overlaps.size()) + " overlaps");
  g.expect(rep.verdict, "verdict is false");
  g.expect(!rep.beta_note.empty(), "missing the beta separation note");
}

void preservation(Gate& g) {
  Theory u = theory_u();
  int checked = 0;
  for (const auto& r : u.rules()) {
    PreservationReport rep = check_rule_preservation(u, r);
    g.expect(rep.verdict, "rule " + r.name + " does not preserve typing");
    ++checked;
  }
  g.expect(checked == 31, "expected 31 rules");
  const RewriteRule* pred2 = u.find_rule("pred-red2");
  g.expect(pred2 && pred2->meta_ctx.size() == 1 && pred2->meta_ctx[0].first == "x" &&
               alpha_eq(pred2->meta_ctx[0].second, c("I")),
           "pred-red2 is not annotated with x : I");
  const RewriteRule* fst = u.find_rule("fst-red");
  g.expect(fst != nullptr, "fst-red is missing");
  if (fst) {
    PreservationReport rep = check_rule_preservation(u, *fst);
    g.expect(rep.used_equations == std::vector<std::string>{"t2 = t", "p2 = p"},
             "fst-red did not use the t2/p2 equations");
  }
}

void catalog(Gate& g) {
  CatalogVerification rep = verify_catalog();
  g.expect(rep.declarations_typed, "some declared type does not land on a sort");
  g.expect(rep.entries.size() == 15,
           "expected 15 entries, found " + std::to_string(rep.entries.size()));
  for (const auto& e : rep.entries) {
    g.expect(e.fragment_ok, e.name + " is not a fragment");
    g.expect(e.orthogonal, e.name + " is not orthogonal");
    g.expect(e.preservation_ok, e.name + " has a type-breaking rule");
  }
  g.expect(rep.ok, "catalog verification verdict is false");
}

void fragment_theorem(Gate& g) {
  Theory u = theory_u();
  std::uint64_t seed = 1789;
  for (const auto& sub : catalog_theories()) {
    gen::Pool pool(sub, seed++, 3);
    for (int round = 0; round < 40 && pool.items().size() < 220; ++round) pool.grow(50);
    g.expect(pool.items().size() >= 200,
             sub.name() + ": only generated " + std::to_string(pool.items().size()) +
                 " judgements");
    well_formed_ctx(u, pool.ctx());
    int failures = 0;
    for (const auto& item : pool.items()) {
      try {
        Term expected = infer(u, pool.ctx(), item.term);
        Term got = recheck_in_fragment(u, sub, pool.ctx(), item.term, expected);
        if (!convertible(u.rules(), got, expected)) ++failures;
      } catch (const Error&) {
        ++failures;
      }
    }
    g.expect(failures == 0,
             sub.name() + ": " + std::to_string(failures) + " judgements failed to re-check");
  }
}

void goldens(Gate& g) {
  Theory u = theory_u();
  auto nf = [&](const Term& t) { return show_term(normalize(u.rules(), t).term); };

  Term identity = lam("p", c("Prop"), lam("x", app(c("Prf"), var("p")), var("x")));
  Term identity_ty = app(c("Prf"), app(c("all"), {c("o"), lam("p", c("Prop"),
                          app(c("imp"), {var("p"), var("p")}))}));
  try {
    check(u, {}, identity, identity_ty);
  } catch (const Error& e) {
    g.expect(false, std::string("identity proof: ") + e.what());
  }

  g.expect(nf(app(c("Prf"), c("top"))) == "!z : Prop. Prf z -> Prf z",
           "normal form of the truth proof type is off");
  g.expect(nf(app(c("Prf"), c("bot"))) == "!z : Prop. Prf z",
           "normal form of the absurdity proof type is off");

  Term pos_s0 = app(c("positive"), app(c("succ"), c("zero")));
  g.expect(nf(app(c("Prf"), app(c("imp"), {pos_s0, pos_s0}))) ==
               "(!z : Prop. Prf z -> Prf z) -> !z : Prop. Prf z -> Prf z",
           "the implication chain over positivity did not unfold");

  Term div_ty = app(c("El"),
      app(c("arr"), {c("iota"),
        app(c("arrd"), {c("iota"),
          lam("y", c("I"),
            app(c("pi"), {app(c("positive"), var("y")),
              lam("z", app(c("Prf"), app(c("positive"), var("y"))), c("iota"))}))})}));
  Term div_expected = arrow(c("I"), pi("y", c("I"),
      arrow(app(c("Prf"), app(c("positive"), var("y"))), c("I"))));
  g.expect(alpha_eq(normalize(u.rules(), div_ty).term, div_expected),
           "the division type does not normalize to its first-order reading");

  Term poly_ty = app(c("Els"), app(c("SchemeAll"),
      lam("x", c("Set"), app(c("up"), app(c("arr"), {var("x"), var("x")})))));
  g.expect(nf(poly_ty) == "!x : Set. El x -> El x",
           "the polymorphic identity type does not reduce");
  try {
    check(u, {}, lam("x", c("Set"), lam("y", app(c("El"), var("x")), var("y"))), poly_ty);
  } catch (const Error& e) {
    g.expect(false, std::string("polymorphic identity: ") + e.what());
  }

  Theory with_eq = theory_u();
  with_eq.append_declaration("eq", app(c("Els"), app(c("SchemeAll"),
      lam("x", c("Set"),
          app(c("up"), app(c("arr"), {var("x"), app(c("arr"), {var("x"), c("o")})}))))));
  Term refl = app(c("PropAll"), lam("x", c("Set"),
      app(c("all"), {var("x"), lam("y", app(c("El"), var("x")),
        app(c("eq"), {var("x"), var("y"), var("y")}))})));
  try {
    check(with_eq, {}, refl, c("Prop"));
  } catch (const Error& e) {
    g.expect(false, std::string("reflexivity proposition: ") + e.what());
  }
}

void irrelevance(Gate& g) {
  Theory u = theory_u();
  Term pos_s0 = app(c("positive"), app(c("succ"), c("zero")));
  Context ctx = {{"h1", app(c("Prf"), pos_s0)}, {"h2", app(c("Prf"), pos_s0)}};
  auto projected = [&](const char* h) {
    return app(c("fst"), {c("iota"), c("positive"),
        app(c("pair"), {c("iota"), c("positive"), app(c("succ"), c("zero")), var(h)})});
  };
  well_formed_ctx(u, ctx);
  g.expect(convertible(u.rules(), projected("h1"), projected("h2")),
           "projections out of differently proved pairs are not convertible");
  g.expect(show_term(normalize(u.rules(), projected("h1")).term) == "succ zero",
           "the projection does not normalize to the packed member");
  g.expect(show_term(normalize(u.rules(), projected("h2")).term) == "succ zero",
           "the second projection does not normalize to the packed member");
  g.expect(show_term(infer(u, ctx, projected("h1"))) == "I",
           "the projection types away from the member domain");
}

void classification(Gate& g) {
  Theory u = theory_u();
  auto cat = catalog_theories();

  Term identity = lam("p", c("Prop"), lam("x", app(c("Prf"), var("p")), var("x")));
  Term identity_ty = app(c("Prf"), app(c("all"), {c("o"), lam("p", c("Prop"),
                          app(c("imp"), {var("p"), var("p")}))}));
  FragmentReport rep = classify(u, u, cat, {}, identity, identity_ty);
  g.expect(rep.smallest == "minimal-stt",
           "identity proof classified as " + rep.smallest);

  oracle::Closure ref = oracle::close(u, oracle::judgement_seed({}, identity, identity_ty));
  std::vector<std::string> ref_matches = oracle::matches(ref, cat);
  g.expect(!ref_matches.empty() && ref_matches.front() == "minimal-stt",
           "the brute-force closure disagrees on the identity proof");
  g.expect(ref_matches == rep.catalog_matches,
           "library and brute-force match lists differ on the identity proof");

  PLLanguage lang;
  lang.functions = {{"c0", 0}, {"s", 1}};
  lang.predicates = {{"pos", 1}};
  PLFormula inner = pl_atom("pos", {pl_var("z")});
  auto [ctx, goal] = encode_pl_sequent(lang, {}, pl_forall("z", pl_imp(inner, inner)));
  Term candidate = lam("z", c("I"),
                       lam("x", app(c("Prf"), app(var("pos"), var("z"))), var("x")));
  FragmentReport fo = classify(u, u, cat, ctx, candidate, goal);
  g.expect(fo.smallest == "minimal-predicate-logic",
           "first-order proof classified as " + fo.smallest);

  oracle::Closure fo_ref = oracle::close(u, oracle::judgement_seed(ctx, candidate, goal));
  std::vector<std::string> fo_matches = oracle::matches(fo_ref, cat);
  g.expect(!fo_matches.empty() && fo_matches.front() == "minimal-predicate-logic",
           "the brute-force closure disagrees on the first-order proof");
  g.expect(fo_matches == fo.catalog_matches,
           "library and brute-force match lists differ on the first-order proof");
}

void pts_encoder(Gate& g) {
  PtsSpec spec;
  spec.sorts = {"star", "box"};
  spec.axioms = {{"star", "box"}};
  spec.rules = {{"star", "star", "star"},
                {"star", "box", "box"},
                {"box", "star", "star"},
                {"box", "box", "box"}};
  Theory th = encode_pts(spec);
  g.expect(th.sig().size() == 9,
           "expected 9 declarations, found " + std::to_string(th.sig().size()));
  g.expect(th.rules().size() == 5,
           "expected 5 rules, found " + std::to_string(th.rules().size()));
  std::map<std::string, std::string> renaming = {
      {"U_star", "Prop"},          {"eps_star", "Prf"},
      {"U_box", "Set"},            {"eps_box", "El"},
      {"dot_star", "o"},           {"Pi_star_star_star", "impd"},
      {"Pi_box_star_star", "all"}, {"Pi_star_box_box", "pi"},
      {"Pi_box_box_box", "arrd"}};
  g.expect(pts_signature_isomorphic(th, subtheory("calculus-of-constructions"), renaming),
           "the encoded system does not match the catalog entry under renaming");
}

void generated_properties(Gate& g) {
  props::SuiteResult result = props::run_suite(987654321);
  g.expect(result.cases >= 10000,
           "only " + std::to_string(result.cases) + " generated cases");
  g.expect(result.failures == 0,
           std::to_string(result.failures) + " generated cases failed");
}

struct Criterion {
  const char* label;
  void (*run)(Gate&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"axiom census 43/31 with 14/27/2 clusters", census},
      {"orthogonality certificate", orthogonality},
      {"preservation of typing for all 31 rules", preservation},
      {"catalog verification across 15 entries", catalog},
      {"fragment re-checking on generated judgements", fragment_theorem},
      {"golden proofs and normal forms", goldens},
      {"proof irrelevance for packed members", irrelevance},
      {"classification against a brute-force closure", classification},
      {"type-system encoder versus the catalog", pts_encoder},
      {"generated property battery", generated_properties},
  };

  int failed = 0;
  int number = 0;
  for (const Criterion& cr : criteria) {
    ++number;
    Gate gate;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(gate);
    } catch (const Error& e) {
      gate.issues.push_back(std::string(error_code_name(e.code)) + ": " + e.what());
    } catch (const std::exception& e) {
      gate.issues.push_back(e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (gate.issues.empty()) {
      std::printf("PASS %2d  %-48s %5lld ms\n", number, cr.label,
                  static_cast<long long>(ms));
    } else {
      ++failed;
      std::printf("FAIL %2d  %-48s %5lld ms\n", number, cr.label,
                  static_cast<long long>(ms));
      for (const std::string& issue : gate.issues)
        std::printf("         - %s\n", issue.c_str());
    }
  }
  std::printf("%d/10 criteria hold\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
