#include "thu/theory_u.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "thu/error.hpp"
#include "thu/fragment.hpp"
#include "thu/typing.hpp"

namespace thu {

namespace {

Term c(const char* n) { return cnst(n); }
Term v(const char* n) { return var(n); }

Theory build_theory_u() {
  Theory th("theory-u");
  const Term TYPE = type_sort();
  const Term Set = c("Set");
  const Term El = c("El");
  const Term Prop = c("Prop");
  const Term Prf = c("Prf");
  const Term I = c("I");

  auto El_ = [&](Term t) { return app(El, t); };
  auto Prf_ = [&](Term t) { return app(Prf, t); };
  auto quantifier = [&]() {
    // !a:Set. (El a -> Prop) -> Prop
    return pi("a", Set, arrow(arrow(El_(v("a")), Prop), Prop));
  };
  auto binary_prop = [&]() { return arrow(Prop, arrow(Prop, Prop)); };

  th.append_declaration("I", TYPE);
  th.append_declaration("Set", TYPE);
  th.append_declaration("El", arrow(Set, TYPE));
  th.append_declaration("iota", Set);
  th.append_declaration("Prop", TYPE);
  th.append_declaration("Prf", arrow(Prop, TYPE));
  th.append_declaration("imp", binary_prop());
  th.append_declaration("all", quantifier());
  th.append_declaration("top", Prop);
  th.append_declaration("bot", Prop);
  th.append_declaration("neg", arrow(Prop, Prop));
  th.append_declaration("and", binary_prop());
  th.append_declaration("or", binary_prop());
  th.append_declaration("ex", quantifier());
  th.append_declaration("Prfc", arrow(Prop, TYPE));
  th.append_declaration("impc", binary_prop());
  th.append_declaration("andc", binary_prop());
  th.append_declaration("orc", binary_prop());
  th.append_declaration("allc", quantifier());
  th.append_declaration("exc", quantifier());
  th.append_declaration("o", Set);
  th.append_declaration("arr", arrow(Set, arrow(Set, Set)));
  th.append_declaration("arrd", pi("x", Set, arrow(arrow(El_(v("x")), Set), Set)));
  th.append_declaration("impd", pi("x", Prop, arrow(arrow(Prf_(v("x")), Prop), Prop)));
  th.append_declaration("pi", pi("x", Prop, arrow(arrow(Prf_(v("x")), Set), Set)));
  th.append_declaration("zero", I);
  th.append_declaration("succ", arrow(I, I));
  th.append_declaration("pred", arrow(I, I));
  th.append_declaration("positive", arrow(I, Prop));
  th.append_declaration("psub", pi("t", Set, arrow(arrow(El_(v("t")), Prop), Set)));
  th.append_declaration(
      "pair", pi("t", Set,
                 pi("p", arrow(El_(v("t")), Prop),
                    pi("m", El_(v("t")),
                       arrow(Prf_(app(v("p"), v("m"))), El_(app(c("psub"), {v("t"), v("p")})))))));
  th.append_declaration(
      "pairD",
      pi("t", Set,
         pi("p", arrow(El_(v("t")), Prop),
            arrow(El_(v("t")), El_(app(c("psub"), {v("t"), v("p")}))))),
      true);
  th.append_declaration(
      "fst", pi("t", Set,
                pi("p", arrow(El_(v("t")), Prop),
                   arrow(El_(app(c("psub"), {v("t"), v("p")})), El_(v("t"))))));
  th.append_declaration(
      "snd", pi("t", Set,
                pi("p", arrow(El_(v("t")), Prop),
                   pi("m", El_(app(c("psub"), {v("t"), v("p")})),
                      Prf_(app(v("p"), app(c("fst"), {v("t"), v("p"), v("m")})))))));
  th.append_declaration("Set1", TYPE);
  th.append_declaration("set1c", c("Set1"));
  th.append_declaration("tarrd", pi("x", Set, arrow(arrow(El_(v("x")), c("Set1")), c("Set1"))));
  th.append_declaration("Ty", arrow(c("Set1"), TYPE));
  th.append_declaration("Scheme", TYPE);
  th.append_declaration("Els", arrow(c("Scheme"), TYPE));
  th.append_declaration("up", arrow(Set, c("Scheme")));
  th.append_declaration("SchemeAll", arrow(arrow(Set, c("Scheme")), c("Scheme")));
  th.append_declaration("PropAll", arrow(arrow(Set, Prop), Prop));

  auto rule = [&](const char* name, Term lhs, Term rhs, Context meta, const char* cluster,
                  std::vector<std::pair<std::string, Term>> eqs = {}, bool dagger = false) {
    RewriteRule r;
    r.name = name;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.meta_ctx = std::move(meta);
    r.lhs_equations = std::move(eqs);
    r.dagger = dagger;
    th.add_rule(r, cluster);
  };

  const Context prop1 = {{"x", Prop}};
  const Context prop2 = {{"x", Prop}, {"y", Prop}};
  const Context set2 = {{"x", Set}, {"y", Set}};
  const Context quant = {{"a", Set}, {"p", arrow(El_(v("a")), Prop)}};

  rule("iota-red", El_(c("iota")), I, {}, "iota");
  rule("imp-red", Prf_(app(c("imp"), {v("x"), v("y")})), arrow(Prf_(v("x")), Prf_(v("y"))),
       prop2, "imp");
  rule("all-red", Prf_(app(c("all"), {v("a"), v("p")})),
       pi("z", El_(v("a")), Prf_(app(v("p"), v("z")))), quant, "all");
  rule("top-red", Prf_(c("top")), pi("z", Prop, arrow(Prf_(v("z")), Prf_(v("z")))), {}, "top");
  rule("bot-red", Prf_(c("bot")), pi("z", Prop, Prf_(v("z"))), {}, "bot");
  rule("neg-red", Prf_(app(c("neg"), v("x"))),
       arrow(Prf_(v("x")), pi("z", Prop, Prf_(v("z")))), prop1, "neg");
  rule("and-red", Prf_(app(c("and"), {v("x"), v("y")})),
       pi("z", Prop, arrow(arrow(Prf_(v("x")), arrow(Prf_(v("y")), Prf_(v("z")))), Prf_(v("z")))),
       prop2, "and");
  rule("or-red", Prf_(app(c("or"), {v("x"), v("y")})),
       pi("z", Prop,
          arrow(arrow(Prf_(v("x")), Prf_(v("z"))),
                arrow(arrow(Prf_(v("y")), Prf_(v("z"))), Prf_(v("z"))))),
       prop2, "or");
  rule("ex-red", Prf_(app(c("ex"), {v("a"), v("p")})),
       pi("z", Prop,
          arrow(pi("x", El_(v("a")), arrow(Prf_(app(v("p"), v("x"))), Prf_(v("z")))),
                Prf_(v("z")))),
       quant, "ex");

  auto nn = [&](Term t) { return app(c("neg"), app(c("neg"), t)); };
  rule("Prfc-red", c("Prfc"), lam("x", Prop, Prf_(nn(v("x")))), {}, "Prfc");
  rule("impc-red", c("impc"),
       lam("x", Prop, lam("y", Prop, app(c("imp"), {nn(v("x")), nn(v("y"))}))), {}, "impc");
  rule("andc-red", c("andc"),
       lam("x", Prop, lam("y", Prop, app(c("and"), {nn(v("x")), nn(v("y"))}))), {}, "andc");
  rule("orc-red", c("orc"),
       lam("x", Prop, lam("y", Prop, app(c("or"), {nn(v("x")), nn(v("y"))}))), {}, "orc");
  rule("allc-red", c("allc"),
       lam("a", Set,
           lam("p", arrow(El_(v("a")), Prop),
               app(c("all"), {v("a"), lam("x", El_(v("a")), nn(app(v("p"), v("x"))))}))),
       {}, "allc");
  rule("exc-red", c("exc"),
       lam("a", Set,
           lam("p", arrow(El_(v("a")), Prop),
               app(c("ex"), {v("a"), lam("x", El_(v("a")), nn(app(v("p"), v("x"))))}))),
       {}, "exc");

  rule("o-red", El_(c("o")), Prop, {}, "o");
  rule("arr-red", El_(app(c("arr"), {v("x"), v("y")})), arrow(El_(v("x")), El_(v("y"))), set2,
       "arr");
  rule("arrd-red", El_(app(c("arrd"), {v("x"), v("y")})),
       pi("z", El_(v("x")), El_(app(v("y"), v("z")))),
       {{"x", Set}, {"y", arrow(El_(v("x")), Set)}}, "arrd");
  rule("impd-red", Prf_(app(c("impd"), {v("x"), v("y")})),
       pi("z", Prf_(v("x")), Prf_(app(v("y"), v("z")))),
       {{"x", Prop}, {"y", arrow(Prf_(v("x")), Prop)}}, "impd");
  rule("pi-red", El_(app(c("pi"), {v("x"), v("y")})),
       pi("z", Prf_(v("x")), El_(app(v("y"), v("z")))),
       {{"x", Prop}, {"y", arrow(Prf_(v("x")), Set)}}, "pi");

  rule("pred-red1", app(c("pred"), c("zero")), c("zero"), {}, "pred");
  rule("pred-red2", app(c("pred"), app(c("succ"), v("x"))), v("x"), {{"x", I}}, "pred");
  rule("positive-red1", app(c("positive"), c("zero")), c("bot"), {}, "positive");
  rule("positive-red2", app(c("positive"), app(c("succ"), v("x"))), c("top"), {{"x", I}},
       "positive");

  rule("pair-red", app(c("pair"), {v("t"), v("p"), v("m"), v("h")}),
       app(c("pairD"), {v("t"), v("p"), v("m")}),
       {{"t", Set},
        {"p", arrow(El_(v("t")), Prop)},
        {"m", El_(v("t"))},
        {"h", Prf_(app(v("p"), v("m")))}},
       "pair", {}, true);
  rule("fst-red", app(c("fst"), {v("t"), v("p"), app(c("pairD"), {v("t2"), v("p2"), v("m")})}),
       v("m"),
       {{"t", Set},
        {"p", arrow(El_(v("t")), Prop)},
        {"t2", Set},
        {"p2", arrow(El_(v("t2")), Prop)},
        {"m", El_(v("t2"))}},
       "fst", {{"t2", v("t")}, {"p2", v("p")}});

  rule("set1c-red", app(c("Ty"), c("set1c")), Set, {}, "set1c");
  rule("tarrd-red", app(c("Ty"), app(c("tarrd"), {v("x"), v("y")})),
       pi("z", El_(v("x")), app(c("Ty"), app(v("y"), v("z")))),
       {{"x", Set}, {"y", arrow(El_(v("x")), c("Set1"))}}, "tarrd");
  rule("up-red", app(c("Els"), app(c("up"), v("x"))), El_(v("x")), {{"x", Set}}, "up");
  rule("SchemeAll-red", app(c("Els"), app(c("SchemeAll"), v("p"))),
       pi("x", Set, app(c("Els"), app(v("p"), v("x")))), {{"p", arrow(Set, c("Scheme"))}},
       "SchemeAll");
  rule("PropAll-red", Prf_(app(c("PropAll"), v("p"))),
       pi("x", Set, Prf_(app(v("p"), v("x")))), {{"p", arrow(Set, Prop)}}, "PropAll");

  return th;
}

std::vector<std::string> with(std::vector<std::string> base,
                              std::initializer_list<const char*> more) {
  for (const char* m : more) base.push_back(m);
  return base;
}

std::vector<CatalogEntry> build_catalog() {
  const std::vector<std::string> minimal_pl = {"I",    "Set", "El",  "iota",
                                               "Prop", "Prf", "imp", "all"};
  const auto constructive_pl = with(minimal_pl, {"top", "bot", "neg", "and", "or", "ex"});
  const auto ecumenical_pl =
      with(constructive_pl, {"Prfc", "impc", "andc", "orc", "allc", "exc"});
  const auto minimal_stt = with(minimal_pl, {"o", "arr"});
  const auto constructive_stt = with(constructive_pl, {"o", "arr"});
  const auto ecumenical_stt = with(ecumenical_pl, {"o", "arr"});
  const std::vector<std::string> coc = {"Prop", "Prf", "Set", "El",  "o",
                                        "impd", "pi",  "all", "arrd"};
  const std::vector<std::string> coc_iota = {"Set", "El",  "iota", "Prop", "Prf",
                                             "impd", "all", "o",    "arrd", "pi"};

  std::vector<CatalogEntry> out;
  out.push_back({"minimal-predicate-logic", minimal_pl,
                 "implication and universal quantification over one domain"});
  out.push_back({"constructive-predicate-logic",
                 constructive_pl,
                 "adds truth, absurdity, negation, conjunction, disjunction, and existence"});
  out.push_back({"ecumenical-predicate-logic", ecumenical_pl,
                 "constructive and double-negation classical connectives side by side; "
                 "negation is shared"});
  out.push_back({"minimal-stt", minimal_stt,
                 "simple type theory with implication and universal quantification"});
  out.push_back({"constructive-stt", constructive_stt,
                 "simple type theory with the full constructive connective set"});
  out.push_back({"ecumenical-stt", ecumenical_stt,
                 "simple type theory with both connective families"});
  out.push_back({"stt-predicate-subtyping",
                 with(minimal_stt, {"psub", "pair", "pairD", "fst", "snd"}),
                 "simple type theory with proof-irrelevant predicate subtypes"});
  out.push_back({"stt-prenex-polymorphism",
                 with(minimal_stt, {"Scheme", "Els", "up", "SchemeAll", "PropAll"}),
                 "simple type theory with prenex quantification over set variables"});
  out.push_back({"stt-psub-prenex",
                 with(minimal_stt, {"psub", "pair", "pairD", "fst", "snd", "Scheme", "Els", "up",
                                    "SchemeAll", "PropAll"}),
                 "simple type theory with predicate subtyping and prenex polymorphism"});
  out.push_back({"calculus-of-constructions", coc,
                 "functional pure type system with dependent products at every corner"});
  out.push_back({"coc-with-iota", coc_iota,
                 "the calculus of constructions over a base domain of individuals"});
  out.push_back({"minimal-subtheory",
                 {"Set", "El", "iota", "Prop", "Prf", "imp", "all", "o", "arr", "arrd", "impd",
                  "pi"},
                 "the common core the other systems extend"});
  out.push_back({"coc-object-dependent-types",
                 {"Prop", "Prf", "Set", "El", "Set1", "Ty", "o", "set1c", "impd", "pi", "all",
                  "arrd", "tarrd"},
                 "the calculus of constructions with a second universe of object-level "
                 "dependent types"});
  out.push_back({"coc-prenex-polymorphism",
                 with(coc_iota, {"Scheme", "Els", "up", "SchemeAll", "PropAll"}),
                 "the calculus of constructions with prenex quantification over sets"});
  {
    std::vector<std::string> everything;
    for (const auto& d : theory_u().sig().declarations()) everything.push_back(d.name);
    out.push_back({"theory-u", everything, "the whole theory"});
  }
  return out;
}

}  // namespace

const Theory& theory_u() {
  static const Theory th = build_theory_u();
  return th;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

Theory subtheory(const std::string& name) {
  const Theory& base = theory_u();
  const CatalogEntry* entry = nullptr;
  for (const auto& e : catalog())
    if (e.name == name) entry = &e;
  if (!entry) fail(ErrorCode::UnknownSubTheory, "no sub-theory named " + name);

  std::set<std::string> seed(entry->clusters.begin(), entry->clusters.end());
  FragmentReport closure = fragment_closure(base, seed);
  std::set<std::string> keep_consts(closure.constants.begin(), closure.constants.end());
  std::set<std::string> keep_rules(closure.rules.begin(), closure.rules.end());

  std::map<std::string, std::string> cluster_of;
  for (const auto& cl : base.clusters())
    for (const auto& rn : cl.rule_names) cluster_of[rn] = cl.name;

  Theory sub(name);
  for (const auto& d : base.sig().declarations())
    if (keep_consts.count(d.name)) sub.append_declaration(d.name, d.type, d.dagger);
  for (const auto& r : base.rules())
    if (keep_rules.count(r.name)) sub.add_rule(r, cluster_of.at(r.name));
  return sub;
}

const std::vector<Theory>& catalog_theories() {
  static const std::vector<Theory> subs = [] {
    std::vector<Theory> out;
    for (const auto& e : catalog()) out.push_back(subtheory(e.name));
    return out;
  }();
  return subs;
}

CatalogVerification verify_catalog(long fuel) {
  const Theory& base = theory_u();
  CatalogVerification out;

  out.declarations_typed = true;
  for (const auto& d : base.sig().declarations()) {
    try {
      Term s = infer(base, {}, d.type, fuel);
      if (!is_type(s) && !is_kind(s)) out.declarations_typed = false;
    } catch (const Error&) {
      out.declarations_typed = false;
    }
  }

  out.ok = out.declarations_typed;
  for (const auto& e : catalog()) {
    EntryVerification ev;
    ev.name = e.name;
    for (const auto& cl : e.clusters)
      if (!base.sig().declares(cl))
        ev.problems.push_back("MissingDependency: cluster " + cl + " is not part of " +
                              base.name());
    Theory sub = subtheory(e.name);

    FragmentCheck fc = is_fragment(base, sub);
    ev.fragment_ok = fc.ok;
    for (const auto& viol : fc.violations) ev.problems.push_back(viol);

    ev.orthogonal = check_orthogonality(sub.rules()).verdict;
    if (!ev.orthogonal) ev.problems.push_back("rule set has overlaps or non-left-linear rules");

    ev.preservation_ok = true;
    for (const auto& r : sub.rules()) {
      PreservationReport pr = check_rule_preservation(sub, r, fuel);
      if (!pr.verdict) {
        ev.preservation_ok = false;
        ev.problems.push_back("rule " + r.name + " does not preserve typing: " + pr.note);
      }
    }

    std::set<std::string> authored(e.clusters.begin(), e.clusters.end());
    for (const auto& d : sub.sig().declarations())
      if (!authored.count(d.name)) ev.completion.push_back(d.name);

    if (!(ev.fragment_ok && ev.orthogonal && ev.preservation_ok)) out.ok = false;
    if (!ev.problems.empty()) out.ok = false;
    out.entries.push_back(std::move(ev));
  }
  return out;
}

}  // namespace thu
